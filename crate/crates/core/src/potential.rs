//! Potential families in natural units.
//!
//! Lengths, energies and strengths are measured with ℏ²/(2μ) = 1, so the
//! stationary equation reads ψ″(x) + (E − V(x))ψ(x) = 0 and k = √E.
//! Every family vanishes outside a finite or exponentially small region.
//!
//! Geometry of the well-barrier families (gap centred on the origin):
//!
//! ```text
//!            well              gap           barrier
//!   [-w - a/2, -a/2)   [-a/2, a/2]   (a/2, a/2 + w]
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{require, Error, Result};

/// Margin (one length unit) kept on both sides of a delta pair.
pub const DELTA_MARGIN: f64 = 1.0;

/// One potential instance.
///
/// Strengths `u1`, `u2` are magnitudes; the family fixes the signs
/// (the well is attractive, the barrier repulsive).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum PotentialSpec {
    /// `-u1 δ(x) + u2 δ(x - a)`.
    #[serde(rename = "dddp")]
    DeltaPair { u1: f64, u2: f64, a: f64 },
    /// `(s² - q² - q) sech²x + s(2q + 1) sech x tanh x`.
    #[serde(rename = "scarf2")]
    ScarfII { s: f64, q: f64 },
    /// Flat well of depth `u1` followed by a flat barrier of height `u2`.
    #[serde(rename = "square-wb")]
    SquareWellBarrier { u1: f64, u2: f64, w: f64, a: f64 },
    /// Single sin² lobes: well of depth `u1`, barrier of height `u2`.
    #[serde(rename = "sin2-wb")]
    SinSquaredWellBarrier { u1: f64, u2: f64, w: f64, a: f64 },
    /// Linear interpolation through `(xs, vs)`, zero outside `[xs[0], xs[n-1]]`.
    Sampled { xs: Vec<f64>, vs: Vec<f64> },
}

impl PotentialSpec {
    pub fn delta_pair(u1: f64, u2: f64, a: f64) -> Result<Self> {
        let p = Self::DeltaPair { u1, u2, a };
        p.validate()?;
        Ok(p)
    }

    pub fn scarf_ii(s: f64, q: f64) -> Result<Self> {
        let p = Self::ScarfII { s, q };
        p.validate()?;
        Ok(p)
    }

    pub fn square_well_barrier(u1: f64, u2: f64, w: f64, a: f64) -> Result<Self> {
        let p = Self::SquareWellBarrier { u1, u2, w, a };
        p.validate()?;
        Ok(p)
    }

    pub fn sin_squared_well_barrier(u1: f64, u2: f64, w: f64, a: f64) -> Result<Self> {
        let p = Self::SinSquaredWellBarrier { u1, u2, w, a };
        p.validate()?;
        Ok(p)
    }

    pub fn sampled(xs: Vec<f64>, vs: Vec<f64>) -> Result<Self> {
        let p = Self::Sampled { xs, vs };
        p.validate()?;
        Ok(p)
    }

    /// Short family name, as used on the command line.
    pub fn family(&self) -> &'static str {
        match self {
            Self::DeltaPair { .. } => "dddp",
            Self::ScarfII { .. } => "scarf2",
            Self::SquareWellBarrier { .. } => "square-wb",
            Self::SinSquaredWellBarrier { .. } => "sin2-wb",
            Self::Sampled { .. } => "sampled",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::DeltaPair { u1, u2, a } => {
                require(u1.is_finite() && u1 >= 0.0, "u1", u1, "must be finite and >= 0")?;
                require(u2.is_finite() && u2 >= 0.0, "u2", u2, "must be finite and >= 0")?;
                require(a.is_finite() && a >= 0.0, "a", a, "must be finite and >= 0")
            }
            Self::ScarfII { s, q } => {
                require(s.is_finite(), "s", s, "must be finite")?;
                require(q.is_finite(), "q", q, "must be finite")
            }
            Self::SquareWellBarrier { u1, u2, w, a } | Self::SinSquaredWellBarrier { u1, u2, w, a } => {
                require(u1.is_finite() && u1 >= 0.0, "u1", u1, "must be finite and >= 0")?;
                require(u2.is_finite() && u2 >= 0.0, "u2", u2, "must be finite and >= 0")?;
                require(w.is_finite() && w > 0.0, "w", w, "must be finite and > 0")?;
                require(a.is_finite() && a >= 0.0, "a", a, "must be finite and >= 0")
            }
            Self::Sampled { ref xs, ref vs } => {
                if xs.len() < 2 {
                    return Err(Error::InvalidSamples("need at least two abscissae"));
                }
                if xs.len() != vs.len() {
                    return Err(Error::InvalidSamples("xs and vs differ in length"));
                }
                if xs.iter().chain(vs).any(|v| !v.is_finite()) {
                    return Err(Error::InvalidSamples("non-finite sample"));
                }
                if xs.windows(2).any(|w| w[1] <= w[0]) {
                    return Err(Error::InvalidSamples("abscissae must be strictly increasing"));
                }
                Ok(())
            }
        }
    }

    /// V(x). Delta pairs have no pointwise value.
    pub fn evaluate(&self, x: f64) -> Result<f64> {
        Ok(match *self {
            Self::DeltaPair { .. } => return Err(Error::NonPointwise),
            Self::ScarfII { s, q } => scarf_value(s, q, x),
            Self::SquareWellBarrier { u1, u2, w, a } => {
                let h = 0.5 * a;
                if (-w - h..-h).contains(&x) {
                    -u1
                } else if x > h && x <= h + w {
                    u2
                } else {
                    0.0
                }
            }
            Self::SinSquaredWellBarrier { u1, u2, w, a } => {
                let h = 0.5 * a;
                if (-w - h..-h).contains(&x) {
                    -u1 * sin_sq(std::f64::consts::PI * (x + h + w) / w)
                } else if x > h && x <= h + w {
                    u2 * sin_sq(std::f64::consts::PI * (x - h) / w)
                } else {
                    0.0
                }
            }
            Self::Sampled { ref xs, ref vs } => interpolate(xs, vs, x),
        })
    }

    /// Interval outside of which |V| < `tol`.
    pub fn support_interval(&self, tol: f64) -> (f64, f64) {
        debug_assert!(tol > 0.0);
        match *self {
            Self::DeltaPair { a, .. } => (-DELTA_MARGIN, a + DELTA_MARGIN),
            Self::ScarfII { s, q } => {
                let envelope = scarf_envelope(s, q);
                if envelope <= tol {
                    (0.0, 0.0)
                } else {
                    let cut = (envelope / tol).acosh();
                    (-cut, cut)
                }
            }
            Self::SquareWellBarrier { w, a, .. } | Self::SinSquaredWellBarrier { w, a, .. } => {
                (-w - 0.5 * a, 0.5 * a + w)
            }
            Self::Sampled { ref xs, .. } => (xs[0], xs[xs.len() - 1]),
        }
    }

    /// Dimensionless strength used as the sweep abscissa.
    ///
    /// Scarf II returns its own `q`; the well-barrier families use `w √u1`.
    pub fn effective_q(&self) -> Result<f64> {
        match *self {
            Self::ScarfII { q, .. } => Ok(q),
            Self::SquareWellBarrier { u1, w, .. } | Self::SinSquaredWellBarrier { u1, w, .. } => Ok(w * u1.sqrt()),
            Self::DeltaPair { .. } => Err(Error::NoEffectiveQ("dddp")),
            Self::Sampled { .. } => Err(Error::NoEffectiveQ("sampled")),
        }
    }

    /// True when the potential vanishes identically.
    pub fn is_null(&self) -> bool {
        match *self {
            Self::DeltaPair { u1, u2, .. } => u1 == 0.0 && u2 == 0.0,
            Self::ScarfII { s, q } => scarf_envelope(s, q) == 0.0,
            Self::SquareWellBarrier { u1, u2, .. } | Self::SinSquaredWellBarrier { u1, u2, .. } => {
                u1 == 0.0 && u2 == 0.0
            }
            Self::Sampled { ref vs, .. } => vs.iter().all(|&v| v == 0.0),
        }
    }

    /// Minimum of V over the real line, `None` for delta pairs.
    pub fn min_value(&self) -> Option<f64> {
        match *self {
            Self::DeltaPair { .. } => None,
            Self::SquareWellBarrier { u1, .. } | Self::SinSquaredWellBarrier { u1, .. } => Some(-u1),
            Self::Sampled { ref vs, .. } => Some(vs.iter().copied().fold(0.0, f64::min)),
            Self::ScarfII { s, q } => {
                // V depends on x through sech and tanh only; |x| <= 40 covers every
                // extremum for parameters of practical size.
                let n = 8000;
                let min = (0..=n)
                    .map(|i| scarf_value(s, q, -40.0 + 80.0 * i as f64 / n as f64))
                    .fold(0.0, f64::min);
                Some(min)
            }
        }
    }
}

pub(crate) fn scarf_value(s: f64, q: f64, x: f64) -> f64 {
    let sech = 1.0 / x.cosh();
    (s * s - q * q - q) * sech * sech + s * (2.0 * q + 1.0) * sech * x.tanh()
}

fn scarf_envelope(s: f64, q: f64) -> f64 {
    (s * s - q * q - q).abs() + (s * (2.0 * q + 1.0)).abs()
}

fn sin_sq(t: f64) -> f64 {
    let s = t.sin();
    s * s
}

fn interpolate(xs: &[f64], vs: &[f64], x: f64) -> f64 {
    let last = xs.len() - 1;
    if x < xs[0] || x > xs[last] {
        return 0.0;
    }
    // first index with xs[i] > x
    let i = xs.partition_point(|&xi| xi <= x);
    if i == 0 {
        return vs[0];
    }
    if i > last {
        return vs[last];
    }
    let (x0, x1) = (xs[i - 1], xs[i]);
    let t = (x - x0) / (x1 - x0);
    vs[i - 1] + t * (vs[i] - vs[i - 1])
}
