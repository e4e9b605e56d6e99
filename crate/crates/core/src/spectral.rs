//! Zero-energy analysis and bound states.
//!
//! A half bound state (HBS) is a zero-energy solution that is flat on both
//! tails. Seeding ψ = 1, ψ′ = 0 on the left edge of the support makes the
//! left tail flat by construction, so the state is an HBS exactly when ψ′
//! vanishes again at the right edge.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::potential::PotentialSpec;
use crate::scarf::count_sign_changes;
use crate::scatter::Solver;

/// Threshold on the normalised right-edge slope for an HBS verdict.
pub const TOL_HBS: f64 = 1e-6;
/// Scan points used to bracket HBS roots.
pub const HBS_SCAN_POINTS: usize = 200;
/// Scan points used to bracket bound states.
pub const BOUND_SCAN_POINTS: usize = 400;
/// Absolute energy tolerance for bound-state bisection.
pub const BOUND_ENERGY_TOL: f64 = 1e-10;
/// Largest disagreement between the two shooting directions.
pub const DIRECTION_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroEnergyProfile {
    pub xs: Vec<f64>,
    pub psi: Vec<f64>,
    /// ψ′(x_R) / max|ψ|.
    pub mismatch: f64,
    pub nodes: usize,
    pub is_hbs: bool,
    /// The potential vanishes identically, so ψ ≡ 1 is a trivial HBS.
    pub trivial: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HbsRoot {
    pub theta: f64,
    pub nodes: usize,
    pub mismatch: f64,
}

impl Solver {
    pub fn zero_energy_profile(&self, p: &PotentialSpec) -> Result<ZeroEnergyProfile> {
        let grid = self.grid(p)?;
        Ok(profile_on_grid(&grid, p.is_null()))
    }

    /// Normalised right-edge slope of the zero-energy solution, without recording.
    pub fn zero_energy_mismatch(&self, p: &PotentialSpec) -> Result<f64> {
        let grid = self.grid(p)?;
        let samples = grid.propagate(0.0, 1.0, 0.0);
        let peak = samples.iter().fold(0.0_f64, |m, s| m.max(s.1.abs()));
        Ok(samples.last().map_or(0.0, |s| s.2) / peak)
    }

    /// Parameter values θ in `range` where `family(θ)` has a half bound state.
    ///
    /// Sign changes of the mismatch on a uniform scan are refined by bisection
    /// until the bracket is narrower than `tol`. Identically vanishing
    /// potentials are skipped.
    pub fn find_hbs<F>(&self, family: F, range: (f64, f64), tol: f64) -> Result<Vec<HbsRoot>>
    where
        F: Fn(f64) -> Result<PotentialSpec> + Sync,
    {
        let (lo, hi) = range;
        let n = HBS_SCAN_POINTS;
        let thetas: Vec<f64> = (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect();
        let mismatch = |theta: f64| -> Result<Option<f64>> {
            let p = family(theta)?;
            if p.is_null() {
                return Ok(None);
            }
            self.zero_energy_mismatch(&p).map(Some)
        };
        let values = thetas.par_iter().map(|&t| mismatch(t)).collect::<Result<Vec<_>>>()?;

        let mut roots = Vec::new();
        for i in 0..n {
            let Some(fa) = values[i] else { continue };
            if fa == 0.0 {
                roots.push(thetas[i]);
                continue;
            }
            let Some(Some(fb)) = values.get(i + 1) else { continue };
            if fa.signum() == fb.signum() || *fb == 0.0 {
                continue;
            }
            let (mut a, mut b, mut f_a) = (thetas[i], thetas[i + 1], fa);
            for _ in 0..200 {
                if b - a < tol {
                    break;
                }
                let mid = 0.5 * (a + b);
                match mismatch(mid)? {
                    Some(0.0) => {
                        a = mid;
                        b = mid;
                    }
                    Some(fm) if fm.signum() == f_a.signum() => {
                        a = mid;
                        f_a = fm;
                    }
                    _ => b = mid,
                }
            }
            roots.push(0.5 * (a + b));
        }

        roots
            .into_iter()
            .map(|theta| {
                let prof = self.zero_energy_profile(&family(theta)?)?;
                Ok(HbsRoot {
                    theta,
                    nodes: prof.nodes,
                    mismatch: prof.mismatch,
                })
            })
            .collect()
    }

    /// Bound-state energies below zero, lowest first.
    ///
    /// `e_min` defaults to `1.05 · min V` (or `−2 u1²` for a delta pair). The
    /// search shoots a left-decaying seed to the right edge and brackets the
    /// zeros of the growing-mode coefficient on a grid uniform in κ = √(−E),
    /// then repeats right to left as a cross-check.
    pub fn bound_states(&self, p: &PotentialSpec, e_min: Option<f64>) -> Result<Vec<f64>> {
        let grid = self.grid(p)?;
        let Some(e_min) = e_min.or_else(|| default_e_min(p)) else {
            return Ok(Vec::new());
        };
        if !(e_min < 0.0) {
            return Ok(Vec::new());
        }
        let forward = |e: f64| {
            let kappa = (-e).sqrt();
            let (y, dy) = grid.shoot(e, 1.0, kappa);
            dy + kappa * y
        };
        let reverse = |e: f64| {
            let kappa = (-e).sqrt();
            let (y, dy) = grid.shoot_back(e, 1.0, -kappa);
            dy - kappa * y
        };
        let fwd = bracket_energies(&forward, e_min);
        let rev = bracket_energies(&reverse, e_min);
        let agree = fwd.len() == rev.len() && fwd.iter().zip(&rev).all(|(a, b)| (a - b).abs() < DIRECTION_TOL);
        if !agree {
            return Err(Error::DirectionMismatch {
                forward: fwd,
                reverse: rev,
            });
        }
        Ok(fwd)
    }
}

fn default_e_min(p: &PotentialSpec) -> Option<f64> {
    match *p {
        PotentialSpec::DeltaPair { u1, .. } => (u1 > 0.0).then(|| -2.0 * u1 * u1),
        _ => p.min_value().filter(|&m| m < 0.0).map(|m| 1.05 * m),
    }
}

fn bracket_energies(f: &(dyn Fn(f64) -> f64 + Sync), e_min: f64) -> Vec<f64> {
    let kappa_max = (-e_min).sqrt();
    let n = BOUND_SCAN_POINTS;
    let energies: Vec<f64> = (1..=n)
        .rev()
        .map(|j| {
            let kappa = kappa_max * j as f64 / n as f64;
            -kappa * kappa
        })
        .collect();
    let values: Vec<f64> = energies.par_iter().map(|&e| f(e)).collect();
    let mut roots = Vec::new();
    for i in 0..n {
        if values[i] == 0.0 {
            roots.push(energies[i]);
            continue;
        }
        if i + 1 == n || values[i + 1] == 0.0 || values[i].signum() == values[i + 1].signum() {
            continue;
        }
        let (mut a, mut b, mut fa) = (energies[i], energies[i + 1], values[i]);
        while b - a > BOUND_ENERGY_TOL {
            let mid = 0.5 * (a + b);
            let fm = f(mid);
            if fm == 0.0 {
                a = mid;
                b = mid;
            } else if fm.signum() == fa.signum() {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        roots.push(0.5 * (a + b));
    }
    roots
}

fn profile_on_grid(grid: &Grid, trivial: bool) -> ZeroEnergyProfile {
    let samples = grid.propagate(0.0, 1.0, 0.0);
    let peak = samples.iter().fold(0.0_f64, |m, s| m.max(s.1.abs()));
    let mismatch = samples.last().map_or(0.0, |s| s.2) / peak;
    let nodes = count_sign_changes(samples.iter().map(|s| s.1), 1e-12 * peak);
    ZeroEnergyProfile {
        xs: samples.iter().map(|s| s.0).collect(),
        psi: samples.iter().map(|s| s.1).collect(),
        mismatch,
        nodes,
        is_hbs: mismatch.abs() < TOL_HBS,
        trivial,
    }
}

pub fn zero_energy_profile(p: &PotentialSpec, n_slabs: usize) -> Result<ZeroEnergyProfile> {
    Solver::with_slabs(n_slabs).zero_energy_profile(p)
}

pub fn find_hbs<F>(family: F, range: (f64, f64), tol: f64, n_slabs: usize) -> Result<Vec<HbsRoot>>
where
    F: Fn(f64) -> Result<PotentialSpec> + Sync,
{
    Solver::with_slabs(n_slabs).find_hbs(family, range, tol)
}

pub fn bound_states(p: &PotentialSpec, e_min: Option<f64>, n_slabs: usize) -> Result<Vec<f64>> {
    Solver::with_slabs(n_slabs).bound_states(p, e_min)
}
