//! 2×2 transfer matrices acting on the pair (ψ, ψ′) at fixed energy.
//!
//! For a real potential every factor has unit determinant (the Wronskian is
//! conserved), and products are composed right to left in the direction of
//! propagation.

use std::ops::Mul;

use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferMatrix {
    pub m11: Complex64,
    pub m12: Complex64,
    pub m21: Complex64,
    pub m22: Complex64,
    pub energy: f64,
}

impl TransferMatrix {
    pub fn identity(energy: f64) -> Self {
        Self {
            m11: ONE,
            m12: ZERO,
            m21: ZERO,
            m22: ONE,
            energy,
        }
    }

    fn real(m11: f64, m12: f64, m21: f64, m22: f64, energy: f64) -> Self {
        Self {
            m11: m11.into(),
            m12: m12.into(),
            m21: m21.into(),
            m22: m22.into(),
            energy,
        }
    }

    pub(crate) fn from_entries(m: Entries, energy: f64) -> Self {
        Self::real(m[0], m[1], m[2], m[3], energy)
    }

    pub fn det(&self) -> Complex64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    /// Inverse, assuming unit determinant.
    pub fn inverse(&self) -> Self {
        Self {
            m11: self.m22,
            m12: -self.m12,
            m21: -self.m21,
            m22: self.m11,
            energy: self.energy,
        }
    }

    /// `next · self`: propagate through `self`, then through `next`.
    pub fn then(&self, next: &Self) -> Self {
        next * self
    }

    pub fn apply(&self, psi: Complex64, dpsi: Complex64) -> (Complex64, Complex64) {
        (self.m11 * psi + self.m12 * dpsi, self.m21 * psi + self.m22 * dpsi)
    }

    /// Real-valued propagation, valid when all entries are real.
    pub(crate) fn apply_real(&self, psi: f64, dpsi: f64) -> (f64, f64) {
        (
            self.m11.re * psi + self.m12.re * dpsi,
            self.m21.re * psi + self.m22.re * dpsi,
        )
    }
}

impl Mul for &TransferMatrix {
    type Output = TransferMatrix;

    fn mul(self, rhs: &TransferMatrix) -> TransferMatrix {
        TransferMatrix {
            m11: self.m11 * rhs.m11 + self.m12 * rhs.m21,
            m12: self.m11 * rhs.m12 + self.m12 * rhs.m22,
            m21: self.m21 * rhs.m11 + self.m22 * rhs.m21,
            m22: self.m21 * rhs.m12 + self.m22 * rhs.m22,
            energy: self.energy,
        }
    }
}

impl Mul for TransferMatrix {
    type Output = TransferMatrix;

    fn mul(self, rhs: TransferMatrix) -> TransferMatrix {
        Mul::mul(&self, &rhs)
    }
}

/// Exact propagator of ψ″ = (V − E)ψ across a slab of constant V.
pub fn slab_transfer(v: f64, energy: f64, dx: f64) -> TransferMatrix {
    TransferMatrix::from_entries(slab_entries(v, energy, dx), energy)
}

/// Real entries `[m11, m12, m21, m22]`.
pub(crate) type Entries = [f64; 4];

pub(crate) fn slab_entries(v: f64, energy: f64, dx: f64) -> Entries {
    debug_assert!(dx >= 0.0);
    let diff = energy - v;
    if diff.abs() < 1e-12 * energy.abs().max(v.abs()).max(1.0) {
        return [1.0, dx, 0.0, 1.0];
    }
    if diff > 0.0 {
        let k = diff.sqrt();
        let (s, c) = (k * dx).sin_cos();
        [c, s / k, -k * s, c]
    } else {
        let kappa = (-diff).sqrt();
        let (s, c) = ((kappa * dx).sinh(), (kappa * dx).cosh());
        [c, s / kappa, kappa * s, c]
    }
}

/// `b · a` for real entries.
pub(crate) fn compose(a: &Entries, b: &Entries) -> Entries {
    [
        b[0] * a[0] + b[1] * a[2],
        b[0] * a[1] + b[1] * a[3],
        b[2] * a[0] + b[3] * a[2],
        b[2] * a[1] + b[3] * a[3],
    ]
}

/// Kick ψ′ → ψ′ + strength·ψ from the delta `strength·δ(x − x0)`.
///
/// Wells carry negative strength, barriers positive.
pub fn delta_transfer(strength: f64, energy: f64) -> TransferMatrix {
    TransferMatrix::real(1.0, 0.0, strength, 1.0, energy)
}

pub(crate) fn delta_entries(strength: f64) -> Entries {
    [1.0, 0.0, strength, 1.0]
}

/// Fourth-order Magnus step across `[x0, x0 + h]` from the potential sampled at
/// the two Gauss-Legendre nodes `x0 + h(1/2 ∓ √3/6)`.
///
/// With `v1 == v2` it coincides with [`slab_transfer`].
pub fn magnus_transfer(v1: f64, v2: f64, energy: f64, h: f64) -> TransferMatrix {
    TransferMatrix::from_entries(magnus_entries(v1, v2, energy, h), energy)
}

pub(crate) fn magnus_entries(v1: f64, v2: f64, energy: f64, h: f64) -> Entries {
    if v1 == v2 {
        return slab_entries(v1, energy, h);
    }
    let w1 = v1 - energy;
    let w2 = v2 - energy;
    let wbar = 0.5 * (w1 + w2);
    // Ω = [[c, h], [h·w̄, −c]], traceless, so Ω² = θ² I
    let c = (3.0_f64.sqrt() / 12.0) * h * h * (w1 - w2);
    let theta_sq = c * c + h * h * wbar;
    let (ch, sh) = exp_coefficients(theta_sq);
    [ch + sh * c, sh * h, sh * h * wbar, ch - sh * c]
}

/// `(cosh θ, sinh θ / θ)` as functions of θ², analytic through θ² = 0.
fn exp_coefficients(theta_sq: f64) -> (f64, f64) {
    if theta_sq.abs() < 1e-6 {
        let t = theta_sq;
        (1.0 + t / 2.0 + t * t / 24.0, 1.0 + t / 6.0 + t * t / 120.0)
    } else if theta_sq > 0.0 {
        let th = theta_sq.sqrt();
        (th.cosh(), th.sinh() / th)
    } else {
        let th = (-theta_sq).sqrt();
        (th.cos(), th.sin() / th)
    }
}
