//! Double Dirac delta well-barrier: `V(x) = -u1 δ(x) + u2 δ(x - a)`.
//!
//! Closed-form reflection amplitude, the half-bound-state manifold
//! `u2 = u1 / (1 - u1 a)` and the zero-energy reflection on it.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};
use crate::potential::PotentialSpec;

/// Relative tolerance for membership of the HBS manifold.
pub const HBS_MANIFOLD_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DddpParams {
    pub u1: f64,
    pub u2: f64,
    pub a: f64,
}

impl DddpParams {
    /// Strictly positive strengths and separation.
    pub fn new(u1: f64, u2: f64, a: f64) -> Result<Self> {
        require(u1.is_finite() && u1 > 0.0, "u1", u1, "must be finite and > 0")?;
        require(u2.is_finite() && u2 > 0.0, "u2", u2, "must be finite and > 0")?;
        require(a.is_finite() && a > 0.0, "a", a, "must be finite and > 0")?;
        Ok(Self { u1, u2, a })
    }

    /// Parameters on the HBS manifold for the given well strength and separation.
    pub fn at_hbs(u1: f64, a: f64) -> Result<Self> {
        let u2 = hbs_u2(u1, a)?;
        Self::new(u1, u2, a)
    }

    /// `|u2 (1 - u1 a) - u1| / u1`, zero on the manifold.
    pub fn hbs_defect(&self) -> f64 {
        (self.u2 * (1.0 - self.u1 * self.a) - self.u1).abs() / self.u1
    }

    pub fn on_hbs_manifold(&self) -> bool {
        self.u1 * self.a < 1.0 && self.hbs_defect() < HBS_MANIFOLD_TOL
    }

    pub fn to_potential(&self) -> PotentialSpec {
        PotentialSpec::DeltaPair {
            u1: self.u1,
            u2: self.u2,
            a: self.a,
        }
    }

    // The amplitude formulas accept zero strengths so that the single-delta and
    // free limits can be checked; `new` is strict.
    fn check_loose(&self) -> Result<()> {
        require(
            self.u1.is_finite() && self.u1 >= 0.0,
            "u1",
            self.u1,
            "must be finite and >= 0",
        )?;
        require(
            self.u2.is_finite() && self.u2 >= 0.0,
            "u2",
            self.u2,
            "must be finite and >= 0",
        )?;
        require(
            self.a.is_finite() && self.a >= 0.0,
            "a",
            self.a,
            "must be finite and >= 0",
        )
    }
}

/// Reflection amplitude r(E) for a wave `e^{ikx} + r e^{-ikx}` incident from the left,
/// with the well at the origin.
pub fn reflection_amplitude(p: &DddpParams, energy: f64) -> Result<Complex64> {
    p.check_loose()?;
    if !(energy > 0.0) {
        return Err(Error::EnergyDomain {
            energy,
            hint: "r(0) is 0/0; use dddp::r0_at_hbs or numeric reflection_at_zero",
        });
    }
    let DddpParams { u1, u2, a } = *p;
    let k = energy.sqrt();
    let i = Complex64::i();
    let ik2 = 2.0 * i * k;
    let back = Complex64::from_polar(1.0, -k * a);
    let fwd = Complex64::from_polar(1.0, k * a);
    let num = ik2 * (u1 * back - u2 * fwd) + 2.0 * i * u1 * u2 * (k * a).sin();
    let den = (ik2 + u1) * (ik2 - u2) * back + u1 * u2 * fwd;
    Ok(-num / den)
}

/// R(E) = |r(E)|².
pub fn reflection(p: &DddpParams, energy: f64) -> Result<f64> {
    Ok(reflection_amplitude(p, energy)?.norm_sqr())
}

/// Barrier strength that puts a nodeless half bound state at E = 0.
pub fn hbs_u2(u1: f64, a: f64) -> Result<f64> {
    require(u1.is_finite() && u1 > 0.0, "u1", u1, "must be finite and > 0")?;
    require(a.is_finite() && a > 0.0, "a", a, "must be finite and > 0")?;
    let u1a = u1 * a;
    if u1a >= 1.0 {
        return Err(Error::NoHbsBranch { u1a });
    }
    Ok(u1 / (1.0 - u1a))
}

/// lim R(E) as E → 0 on the HBS manifold; depends on `u1 a` alone.
pub fn r0_at_hbs(u1: f64, a: f64) -> Result<f64> {
    hbs_u2(u1, a)?;
    let p = u1 * a;
    let num = p * p - 2.0 * p;
    let ratio = num / (num + 2.0);
    Ok(ratio * ratio)
}

/// Zero-energy half bound state, normalised to 1 on the left tail.
///
/// Constant left of the well, linear between the deltas, constant right of the
/// barrier.
pub fn hbs_wavefunction(p: &DddpParams, x: f64) -> Result<f64> {
    if !(p.u1 > 0.0 && p.a > 0.0) || p.u1 * p.a >= 1.0 {
        return Err(Error::NoHbsBranch { u1a: p.u1 * p.a });
    }
    let defect = p.hbs_defect();
    if !(defect < HBS_MANIFOLD_TOL) {
        return Err(Error::OffHbsManifold { defect });
    }
    Ok(if x <= 0.0 {
        1.0
    } else if x < p.a {
        1.0 - p.u1 * x
    } else {
        1.0 - p.u1 * p.a
    })
}
