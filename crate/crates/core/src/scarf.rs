//! Scarf II potential `V(x) = (s² − q² − q) sech²x + s(2q + 1) sech x tanh x`.
//!
//! Closed-form transmission and reflection, their integer-q threshold
//! limits, the bound spectrum `E_n = −(n − q)²` and the eigenfunctions.
//!
//! The potential is invariant under `q → −1 − q` combined with `x → −x`, so
//! every spectral quantity for `q < −1/2` is computed from the mirror image.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};
use crate::jacobi::jacobi_polynomial;
use crate::potential::PotentialSpec;

/// Window for treating q as an integer.
pub const INTEGER_Q_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScarfParams {
    pub s: f64,
    pub q: f64,
}

impl ScarfParams {
    pub fn new(s: f64, q: f64) -> Result<Self> {
        require(s.is_finite() && s >= 0.0, "s", s, "must be finite and >= 0")?;
        require(q.is_finite(), "q", q, "must be finite")?;
        Ok(Self { s, q })
    }

    pub fn to_potential(&self) -> PotentialSpec {
        PotentialSpec::ScarfII { s: self.s, q: self.q }
    }

    pub fn has_integer_q(&self) -> bool {
        is_integer_q(self.q)
    }
}

pub fn is_integer_q(q: f64) -> bool {
    (q - q.round()).abs() < INTEGER_Q_TOL
}

/// `q` of the mirror-equivalent potential with `q >= -1/2`.
fn canonical_q(q: f64) -> (f64, bool) {
    if q < -0.5 {
        (-1.0 - q, true)
    } else {
        (q, false)
    }
}

/// sin²(πq) via the fractional part, exactly zero at integers.
fn sin_sq_pi(q: f64) -> f64 {
    let s = (PI * (q - q.round())).sin();
    s * s
}

/// (R, T) at energy E > 0.
///
/// The denominator is the sum of the two numerators, which equals the
/// factored form `(sinh²πk + sin²πq)(sinh²πk + cosh²πs)` identically and keeps
/// R + T within a couple of ulps of one.
pub fn probabilities(p: &ScarfParams, energy: f64) -> Result<(f64, f64)> {
    if !(energy > 0.0) {
        return Err(Error::EnergyDomain {
            energy,
            hint: "use scarf::r0 / scarf::t0 for the integer-q threshold limit",
        });
    }
    let k = energy.sqrt();
    let sh_k = (PI * k).sinh();
    let ch_k = (PI * k).cosh();
    let sh_s = (PI * p.s).sinh();
    let ch_s = (PI * p.s).cosh();
    let s_k = sh_k * sh_k;
    let q_term = sin_sq_pi(p.q);
    let num_t = s_k * ch_k * ch_k;
    let num_r = q_term * (s_k + ch_s * ch_s) + s_k * sh_s * sh_s;
    let den = num_t + num_r;
    if den == 0.0 || !den.is_finite() {
        // sinh πk underflowed at integer q, or overflowed at huge k
        return Ok(if den == 0.0 { (r0(p.s), t0(p.s)) } else { (0.0, 1.0) });
    }
    Ok((num_r / den, num_t / den))
}

pub fn transmission(p: &ScarfParams, energy: f64) -> Result<f64> {
    probabilities(p, energy).map(|(_, t)| t)
}

pub fn reflection(p: &ScarfParams, energy: f64) -> Result<f64> {
    probabilities(p, energy).map(|(r, _)| r)
}

/// lim T(E), E → 0, for integer q: sech²πs.
pub fn t0(s: f64) -> f64 {
    let c = 1.0 / (PI * s).cosh();
    c * c
}

/// lim R(E), E → 0, for integer q: tanh²πs.
pub fn r0(s: f64) -> f64 {
    let t = (PI * s).tanh();
    t * t
}

/// Zero-energy limit of R for any q: tanh²πs at integer q, 1 otherwise.
pub fn reflection_limit(p: &ScarfParams) -> f64 {
    if p.has_integer_q() {
        r0(p.s)
    } else {
        1.0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundSpectrum {
    /// Bound energies, ground state first.
    pub energies: Vec<f64>,
    pub count: usize,
    /// Index n of the zero-energy half bound state, when q is an integer.
    pub hbs_index: Option<usize>,
}

/// Bound energies `−(n − q)²` with `n < q`; the `n = q` member of an integer q
/// is the half bound state and is reported separately.
pub fn bound_energies(q: f64) -> BoundSpectrum {
    let (q, _) = canonical_q(q);
    let (energies, hbs_index) = if is_integer_q(q) {
        let m = q.round() as usize;
        ((0..m).map(|n| -(n as f64 - q).powi(2)).collect::<Vec<_>>(), Some(m))
    } else if q > 0.0 {
        let top = q.floor() as usize;
        ((0..=top).map(|n| -(n as f64 - q).powi(2)).collect(), None)
    } else {
        (Vec::new(), None)
    };
    BoundSpectrum {
        count: energies.len(),
        energies,
        hbs_index,
    }
}

/// Eigenfunction ψ_n, real and scaled to unit maximum amplitude.
///
/// ψ_n(x) = iⁿ (1 + y²)^{−q/2} exp(−s arctan y) P_n^{(−is−q−1/2, is−q−1/2)}(iy),
/// y = sinh x. For integer q and n = q this is the half bound state, whose
/// tails tend to constants.
#[derive(Debug, Clone)]
pub struct ScarfEigenfunction {
    s: f64,
    q: f64,
    n: usize,
    mirrored: bool,
    energy: f64,
    scale: f64,
    scan: Vec<(f64, f64)>,
}

impl ScarfEigenfunction {
    pub fn new(p: &ScarfParams, n: usize) -> Result<Self> {
        let (q, mirrored) = canonical_q(p.q);
        let max = if is_integer_q(q) {
            Some(q.round() as usize)
        } else if q > 0.0 {
            Some(q.floor() as usize)
        } else {
            None
        };
        match max {
            Some(max) if n <= max => {}
            _ => {
                return Err(Error::IndexOutOfRange {
                    n,
                    max: max.unwrap_or(0),
                })
            }
        }
        let mut f = Self {
            s: p.s,
            q,
            n,
            mirrored,
            energy: 0.0 - (n as f64 - q).powi(2),
            scale: 1.0,
            scan: Vec::new(),
        };
        // the growth of P_n(iy) ~ sinh(x)^n bounds the usable range
        let reach = (600.0 / (n as f64 + 1.0)).min(60.0);
        let points = 6001;
        f.scan = (0..points)
            .map(|i| {
                let x = -reach + 2.0 * reach * i as f64 / (points - 1) as f64;
                (x, f.raw(x).re)
            })
            .collect();
        let peak = f.scan.iter().fold(0.0_f64, |m, &(_, v)| m.max(v.abs()));
        f.scale = 1.0 / peak;
        for sample in &mut f.scan {
            sample.1 *= f.scale;
        }
        Ok(f)
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn index(&self) -> usize {
        self.n
    }

    pub fn is_half_bound(&self) -> bool {
        self.energy == 0.0 || (is_integer_q(self.q) && self.n == self.q.round() as usize)
    }

    /// Unnormalised complex value; its imaginary part vanishes up to rounding.
    pub fn raw(&self, x: f64) -> Complex64 {
        let x = if self.mirrored { -x } else { x };
        let y = x.sinh();
        // ln(1 + y²) = 2 ln cosh x, written to stay finite for large |x|
        let ax = x.abs();
        let ln_cosh = ax + (-2.0 * ax).exp().ln_1p() - std::f64::consts::LN_2;
        let amplitude = (-self.q * ln_cosh - self.s * y.atan()).exp();
        let alpha = Complex64::new(-self.q - 0.5, -self.s);
        let beta = Complex64::new(-self.q - 0.5, self.s);
        let jac = jacobi_polynomial(self.n, alpha, beta, Complex64::new(0.0, y));
        Complex64::i().powu(self.n as u32) * jac * amplitude
    }

    /// ψ_n(x) with max |ψ_n| = 1.
    pub fn value(&self, x: f64) -> f64 {
        self.raw(x).re * self.scale
    }

    /// Sign changes of ψ_n on the real line.
    pub fn nodes(&self) -> usize {
        count_sign_changes(self.scan.iter().map(|&(_, v)| v), 1e-9)
    }
}

/// Convenience wrapper around [`ScarfEigenfunction`].
pub fn eigenfunction(p: &ScarfParams, n: usize, x: f64) -> Result<f64> {
    Ok(ScarfEigenfunction::new(p, n)?.value(x))
}

/// Sign changes in a sequence, ignoring entries with |v| <= `floor`.
pub(crate) fn count_sign_changes(values: impl IntoIterator<Item = f64>, floor: f64) -> usize {
    let mut last = 0.0_f64;
    let mut changes = 0;
    for v in values {
        if v.abs() <= floor {
            continue;
        }
        if last != 0.0 && (v > 0.0) != (last > 0.0) {
            changes += 1;
        }
        last = v;
    }
    changes
}
