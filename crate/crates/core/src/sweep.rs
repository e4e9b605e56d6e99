//! Uniform one-parameter scans of R and T.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dddp::{self, DddpParams};
use crate::error::{Error, Result};
use crate::potential::PotentialSpec;
use crate::scarf::{self, ScarfEigenfunction, ScarfParams};
use crate::scatter::{Solver, DEFAULT_N_SLABS};

/// Energy used by the figure scans.
pub const DEFAULT_ENERGY: f64 = 0.01;

/// Potential families addressable by name from sweeps and the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "dddp")]
    DeltaPair,
    #[serde(rename = "scarf2")]
    ScarfII,
    #[serde(rename = "square-wb")]
    SquareWellBarrier,
    #[serde(rename = "sin2-wb")]
    SinSquaredWellBarrier,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::DeltaPair,
        Family::ScarfII,
        Family::SquareWellBarrier,
        Family::SinSquaredWellBarrier,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::DeltaPair => "dddp",
            Self::ScarfII => "scarf2",
            Self::SquareWellBarrier => "square-wb",
            Self::SinSquaredWellBarrier => "sin2-wb",
        }
    }

    /// Parameter names accepted by [`Family::potential`].
    ///
    /// For the delta pair an absent `u2` is tied to the half-bound-state
    /// relation. The two finite-width families take either `u1` or the
    /// strength `q = w √u1`, and either `u2` or `eta = u2 / u1` (default 1);
    /// `w` defaults to 1.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            Self::DeltaPair => &["u1", "u2", "a"],
            Self::ScarfII => &["s", "q"],
            Self::SquareWellBarrier | Self::SinSquaredWellBarrier => &["u1", "u2", "w", "a", "q", "eta"],
        }
    }

    pub fn has_closed_form(self) -> bool {
        matches!(self, Self::DeltaPair | Self::ScarfII)
    }

    pub fn potential(self, params: &BTreeMap<String, f64>) -> Result<PotentialSpec> {
        for key in params.keys() {
            if !self.parameters().contains(&key.as_str()) {
                return Err(Error::UnknownParameter {
                    family: self.name(),
                    name: key.clone(),
                });
            }
        }
        let get = |k: &str| params.get(k).copied();
        let need = |k: &'static str| {
            get(k).ok_or(Error::MissingParameter {
                family: self.name(),
                name: k,
            })
        };
        match self {
            Self::DeltaPair => {
                let (u1, a) = (need("u1")?, need("a")?);
                let u2 = match get("u2") {
                    Some(u2) => u2,
                    None => dddp::hbs_u2(u1, a)?,
                };
                PotentialSpec::delta_pair(u1, u2, a)
            }
            Self::ScarfII => PotentialSpec::scarf_ii(need("s")?, need("q")?),
            Self::SquareWellBarrier | Self::SinSquaredWellBarrier => {
                let w = get("w").unwrap_or(1.0);
                let a = need("a")?;
                let u1 = match (get("u1"), get("q")) {
                    (Some(_), Some(_)) => return Err(Error::InvalidSweep("give either u1 or q, not both".into())),
                    (Some(u1), None) => u1,
                    (None, Some(q)) => (q / w).powi(2),
                    (None, None) => {
                        return Err(Error::MissingParameter {
                            family: self.name(),
                            name: "u1",
                        })
                    }
                };
                let u2 = match (get("u2"), get("eta")) {
                    (Some(_), Some(_)) => return Err(Error::InvalidSweep("give either u2 or eta, not both".into())),
                    (Some(u2), None) => u2,
                    (None, eta) => eta.unwrap_or(1.0) * u1,
                };
                if self == Self::SquareWellBarrier {
                    PotentialSpec::square_well_barrier(u1, u2, w, a)
                } else {
                    PotentialSpec::sin_squared_well_barrier(u1, u2, w, a)
                }
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Analytic,
    Numeric,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Analytic => "analytic",
            Self::Numeric => "numeric",
        })
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "analytic" => Ok(Self::Analytic),
            "numeric" => Ok(Self::Numeric),
            _ => Err(Error::InvalidSweep(format!("unknown engine `{s}`"))),
        }
    }
}

/// Everything needed to reproduce a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub family: Family,
    pub vary: String,
    pub range: (f64, f64),
    pub steps: usize,
    /// E = 0 selects the threshold limit.
    pub energy: f64,
    pub engine: Engine,
    pub n_slabs: usize,
    /// Fixed parameters; `vary` is inserted per point.
    pub params: BTreeMap<String, f64>,
}

impl SweepSpec {
    pub fn new(family: Family, vary: &str, range: (f64, f64), steps: usize) -> Self {
        Self {
            family,
            vary: vary.to_string(),
            range,
            steps,
            energy: DEFAULT_ENERGY,
            engine: Engine::Numeric,
            n_slabs: DEFAULT_N_SLABS,
            params: BTreeMap::new(),
        }
    }

    pub fn energy(mut self, energy: f64) -> Self {
        self.energy = energy;
        self
    }

    pub fn engine(mut self, engine: Engine) -> Self {
        self.engine = engine;
        self
    }

    pub fn n_slabs(mut self, n_slabs: usize) -> Self {
        self.n_slabs = n_slabs;
        self
    }

    pub fn param(mut self, name: &str, value: f64) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    /// Abscissae `lo + (hi − lo) i / (steps − 1)`.
    pub fn grid(&self) -> Vec<f64> {
        let (lo, hi) = self.range;
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / last
                }
            })
            .collect()
    }

    pub fn potential_at(&self, theta: f64) -> Result<PotentialSpec> {
        let mut params = self.params.clone();
        params.insert(self.vary.clone(), theta);
        self.family.potential(&params)
    }

    fn check(&self) -> Result<()> {
        if !self.family.parameters().contains(&self.vary.as_str()) {
            return Err(Error::UnknownParameter {
                family: self.family.name(),
                name: self.vary.clone(),
            });
        }
        if self.params.contains_key(&self.vary) {
            return Err(Error::InvalidSweep(format!("`{}` is both varied and fixed", self.vary)));
        }
        if self.steps < 2 {
            return Err(Error::InvalidSweep(format!(
                "steps = {} must be at least 2",
                self.steps
            )));
        }
        let (lo, hi) = self.range;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidSweep(format!(
                "range {lo}:{hi} must be finite and ascending"
            )));
        }
        if !(self.energy.is_finite() && self.energy >= 0.0) {
            return Err(Error::EnergyDomain {
                energy: self.energy,
                hint: "sweeps take E > 0, or E = 0 for the threshold limit",
            });
        }
        if self.engine == Engine::Analytic && !self.family.has_closed_form() {
            return Err(Error::NoClosedForm(self.family.name()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub param: f64,
    #[serde(rename = "E")]
    pub energy: f64,
    #[serde(rename = "R")]
    pub reflection: f64,
    #[serde(rename = "T")]
    pub transmission: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepMetadata {
    #[serde(flatten)]
    pub spec: SweepSpec,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub metadata: SweepMetadata,
    pub records: Vec<SweepRecord>,
}

impl SweepTable {
    pub fn all_converged(&self) -> bool {
        self.records.iter().all(|r| r.converged)
    }
}

/// Evaluates R and T on every grid point, in parallel, in grid order.
pub fn sweep(spec: &SweepSpec) -> Result<SweepTable> {
    spec.check()?;
    let solver = Solver::with_slabs(spec.n_slabs);
    let records = spec
        .grid()
        .into_par_iter()
        .map(|theta| {
            let p = spec.potential_at(theta)?;
            let (reflection, transmission, converged) = match spec.engine {
                Engine::Analytic => analytic_point(&p, spec.energy)?,
                Engine::Numeric => numeric_point(&solver, &p, spec.energy)?,
            };
            Ok(SweepRecord {
                param: theta,
                energy: spec.energy,
                reflection,
                transmission,
                converged,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable {
        metadata: SweepMetadata {
            spec: spec.clone(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
        records,
    })
}

fn analytic_point(p: &PotentialSpec, energy: f64) -> Result<(f64, f64, bool)> {
    match *p {
        PotentialSpec::DeltaPair { u1, u2, a } => {
            let params = DddpParams { u1, u2, a };
            let r = if energy > 0.0 {
                dddp::reflection(&params, energy)?
            } else if p.is_null() {
                0.0
            } else if params.on_hbs_manifold() {
                dddp::r0_at_hbs(u1, a)?
            } else {
                1.0
            };
            Ok((r, 1.0 - r, true))
        }
        PotentialSpec::ScarfII { s, q } => {
            let params = ScarfParams::new(s, q)?;
            if energy > 0.0 {
                let (r, t) = scarf::probabilities(&params, energy)?;
                Ok((r, t, true))
            } else {
                let r = scarf::reflection_limit(&params);
                Ok((r, 1.0 - r, true))
            }
        }
        _ => Err(Error::NoClosedForm(p.family())),
    }
}

fn numeric_point(solver: &Solver, p: &PotentialSpec, energy: f64) -> Result<(f64, f64, bool)> {
    if energy > 0.0 {
        let s = solver.scattering(p, energy)?;
        Ok((s.reflection, s.transmission, true))
    } else {
        let z = solver.reflection_at_zero(p)?;
        Ok((z.reflection, 1.0 - z.reflection, z.converged))
    }
}

/// Sampled Scarf II eigenfunction, scaled to unit maximum amplitude.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WavefunctionTable {
    pub s: f64,
    pub q: f64,
    pub n: usize,
    pub energy: f64,
    pub half_bound: bool,
    pub nodes: usize,
    pub xs: Vec<f64>,
    pub psi: Vec<f64>,
}

pub fn wavefunction_table(p: &ScarfParams, n: usize, range: (f64, f64), points: usize) -> Result<WavefunctionTable> {
    let (lo, hi) = range;
    if points < 2 || !(lo < hi) {
        return Err(Error::InvalidSweep(format!(
            "need points >= 2 and lo < hi, got {points} on {lo}:{hi}"
        )));
    }
    let f = ScarfEigenfunction::new(p, n)?;
    let xs: Vec<f64> = (0..points)
        .map(|i| {
            if i + 1 == points {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (points - 1) as f64
            }
        })
        .collect();
    let psi = xs.iter().map(|&x| f.value(x)).collect();
    Ok(WavefunctionTable {
        s: p.s,
        q: p.q,
        n,
        energy: f.energy(),
        half_bound: f.is_half_bound(),
        nodes: f.nodes(),
        xs,
        psi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!(matches!("morse".parse::<Family>(), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn parameter_mapping() {
        let mut m = BTreeMap::new();
        m.insert("u1".to_string(), 1.0);
        m.insert("a".to_string(), 0.5);
        assert_eq!(
            Family::DeltaPair.potential(&m).unwrap(),
            PotentialSpec::delta_pair(1.0, 2.0, 0.5).unwrap()
        );
        let mut m = BTreeMap::new();
        m.insert("q".to_string(), 3.0);
        m.insert("w".to_string(), 2.0);
        m.insert("a".to_string(), 1.0);
        m.insert("eta".to_string(), 0.1);
        let p = Family::SinSquaredWellBarrier.potential(&m).unwrap();
        assert_eq!(
            p,
            PotentialSpec::sin_squared_well_barrier(2.25, 0.225, 2.0, 1.0).unwrap()
        );
        m.insert("s".to_string(), 0.2);
        assert!(matches!(
            Family::SquareWellBarrier.potential(&m),
            Err(Error::UnknownParameter { .. })
        ));
        let mut m = BTreeMap::new();
        m.insert("s".to_string(), 0.2);
        assert!(matches!(
            Family::ScarfII.potential(&m),
            Err(Error::MissingParameter { name: "q", .. })
        ));
    }

    #[test]
    fn grid_is_uniform_and_ordered() {
        let spec = SweepSpec::new(Family::ScarfII, "q", (-0.5, 3.0), 8).param("s", 0.2);
        let g = spec.grid();
        assert_eq!(g.len(), 8);
        assert_eq!(g[0], -0.5);
        assert_eq!(g[7], 3.0);
        assert!(g.windows(2).all(|w| (w[1] - w[0] - 0.5).abs() < 1e-15));
    }

    #[test]
    fn spec_checks() {
        let base = SweepSpec::new(Family::SquareWellBarrier, "q", (0.0, 1.0), 5).param("a", 0.0);
        assert!(matches!(
            sweep(&base.clone().engine(Engine::Analytic)),
            Err(Error::NoClosedForm("square-wb"))
        ));
        let mut bad = base.clone();
        bad.steps = 1;
        assert!(sweep(&bad).is_err());
        let mut bad = base.clone();
        bad.range = (1.0, 0.0);
        assert!(sweep(&bad).is_err());
        assert!(sweep(&base.clone().energy(-1.0)).is_err());
        assert!(sweep(&SweepSpec::new(Family::ScarfII, "eta", (0.0, 1.0), 3)).is_err());
    }

    #[test]
    fn threshold_sweep_on_dddp_manifold() {
        let spec = SweepSpec::new(Family::DeltaPair, "u1", (0.1, 0.9), 9)
            .param("a", 1.0)
            .energy(0.0)
            .engine(Engine::Analytic);
        let t = sweep(&spec).unwrap();
        for rec in &t.records {
            assert_abs_diff_eq!(
                rec.reflection,
                dddp::r0_at_hbs(rec.param, 1.0).unwrap(),
                epsilon = 1e-15
            );
        }
        let n = sweep(&spec.clone().engine(Engine::Numeric).n_slabs(50)).unwrap();
        assert!(n.all_converged());
        for (a, b) in t.records.iter().zip(&n.records) {
            assert_abs_diff_eq!(a.reflection, b.reflection, epsilon = 1e-4);
        }
    }

    #[test]
    fn engines_agree_for_scarf() {
        let spec = SweepSpec::new(Family::ScarfII, "q", (-0.5, 3.0), 15).param("s", 0.2);
        let a = sweep(&spec.clone().engine(Engine::Analytic)).unwrap();
        let n = sweep(&spec).unwrap();
        for (x, y) in a.records.iter().zip(&n.records) {
            assert_abs_diff_eq!(x.reflection, y.reflection, epsilon = 1e-3);
            assert_abs_diff_eq!(x.reflection + x.transmission, 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn wavefunction_nodes() {
        let p = ScarfParams::new(0.2, 2.0).unwrap();
        let w = wavefunction_table(&p, 2, (-10.0, 10.0), 201).unwrap();
        assert_eq!(w.nodes, 2);
        assert!(w.half_bound);
        assert_eq!(w.xs.len(), 201);
        assert_eq!(w.energy, 0.0);
    }
}
