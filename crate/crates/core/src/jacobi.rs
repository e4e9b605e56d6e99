//! Jacobi polynomials with complex parameters and argument.

use num_complex::Complex64;

/// P_n^{(α, β)}(z) by the three-term recurrence.
///
/// Parameter combinations that zero a leading recurrence coefficient fall back
/// to the explicit binomial sum, which is finite for every (α, β).
pub fn jacobi_polynomial(n: usize, alpha: Complex64, beta: Complex64, z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    if n == 0 {
        return one;
    }
    let p1 = (alpha + 1.0) + (alpha + beta + 2.0) * (z - 1.0) * 0.5;
    if n == 1 {
        return p1;
    }
    let ab = alpha + beta;
    let aa_bb = alpha * alpha - beta * beta;
    let (mut prev, mut cur) = (one, p1);
    for m in 2..=n {
        let m = m as f64;
        let c = 2.0 * m + ab;
        let a1 = 2.0 * m * (m + ab) * (c - 2.0);
        if a1.norm() < 1e-13 * (1.0 + c.norm()).powi(3) {
            return jacobi_binomial_sum(n, alpha, beta, z);
        }
        let a2 = (c - 1.0) * (c * (c - 2.0) * z + aa_bb);
        let a3 = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * c;
        let next = (a2 * cur - a3 * prev) / a1;
        prev = cur;
        cur = next;
    }
    cur
}

/// Σ_m C(n+α, n−m) C(n+β, m) ((z−1)/2)^m ((z+1)/2)^{n−m}.
fn jacobi_binomial_sum(n: usize, alpha: Complex64, beta: Complex64, z: Complex64) -> Complex64 {
    let lo = (z - 1.0) * 0.5;
    let hi = (z + 1.0) * 0.5;
    (0..=n)
        .map(|m| {
            binomial(alpha + n as f64, n - m)
                * binomial(beta + n as f64, m)
                * lo.powu(m as u32)
                * hi.powu((n - m) as u32)
        })
        .sum()
}

fn binomial(w: Complex64, j: usize) -> Complex64 {
    (0..j).fold(Complex64::new(1.0, 0.0), |acc, i| acc * (w - i as f64) / (i + 1) as f64)
}
