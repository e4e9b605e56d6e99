//! Numerical scattering through total transfer matrices.
//!
//! Matching convention: ψ = e^{ikx} + r e^{−ikx} left of the support and
//! ψ = t e^{ikx} right of it, with plane waves referred to the absolute
//! origin. Delta-pair amplitudes are therefore directly comparable with the
//! closed form, which places the well at x = 0.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Grid, SlabRule};
use crate::potential::PotentialSpec;
use crate::transfer::TransferMatrix;

pub const DEFAULT_N_SLABS: usize = 4000;
pub const DEFAULT_SUPPORT_TOL: f64 = 1e-12;

/// Energies used to approach the zero-energy limit, last one reported.
pub const ZERO_LIMIT_ENERGIES: [f64; 3] = [1e-6, 1e-8, 1e-10];
/// Largest change between the last two limit energies still counted as converged.
pub const ZERO_LIMIT_TOL: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScatteringResult {
    pub r: Complex64,
    pub t: Complex64,
    #[serde(rename = "R")]
    pub reflection: f64,
    #[serde(rename = "T")]
    pub transmission: f64,
    #[serde(rename = "E")]
    pub energy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroEnergyLimit {
    /// R at the smallest energy of the sequence.
    pub reflection: f64,
    pub converged: bool,
    /// `(E, R)` for every energy of the sequence.
    pub sequence: Vec<(f64, f64)>,
}

/// Numerical settings shared by the scattering and spectral routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Solver {
    pub n_slabs: usize,
    pub rule: SlabRule,
    pub support_tol: f64,
}

impl Default for Solver {
    fn default() -> Self {
        Self {
            n_slabs: DEFAULT_N_SLABS,
            rule: SlabRule::default(),
            support_tol: DEFAULT_SUPPORT_TOL,
        }
    }
}

impl Solver {
    pub fn with_slabs(n_slabs: usize) -> Self {
        Self {
            n_slabs,
            ..Self::default()
        }
    }

    pub fn grid(&self, p: &PotentialSpec) -> Result<Grid> {
        Grid::new(p, self.n_slabs, self.rule, self.support_tol)
    }

    pub fn total_transfer(&self, p: &PotentialSpec, energy: f64) -> Result<TransferMatrix> {
        check_energy(energy, true)?;
        Ok(self.grid(p)?.transfer(energy))
    }

    pub fn scattering(&self, p: &PotentialSpec, energy: f64) -> Result<ScatteringResult> {
        check_energy(energy, false)?;
        Ok(scatter_on_grid(&self.grid(p)?, energy))
    }

    pub fn reflection_at_zero(&self, p: &PotentialSpec) -> Result<ZeroEnergyLimit> {
        let grid = self.grid(p)?;
        let sequence: Vec<(f64, f64)> = ZERO_LIMIT_ENERGIES
            .iter()
            .map(|&e| (e, scatter_on_grid(&grid, e).reflection))
            .collect();
        let n = sequence.len();
        let converged = (sequence[n - 1].1 - sequence[n - 2].1).abs() < ZERO_LIMIT_TOL;
        Ok(ZeroEnergyLimit {
            reflection: sequence[n - 1].1,
            converged,
            sequence,
        })
    }
}

fn check_energy(energy: f64, allow_zero: bool) -> Result<()> {
    let ok = energy.is_finite() && (energy > 0.0 || (allow_zero && energy == 0.0));
    if ok {
        Ok(())
    } else {
        Err(Error::EnergyDomain {
            energy,
            hint: "scattering needs E > 0; use reflection_at_zero for the threshold limit",
        })
    }
}

/// Amplitudes from a total matrix `m` spanning `[left, right]` at k = √E.
pub fn amplitudes(m: &TransferMatrix, left: f64, right: f64) -> (Complex64, Complex64) {
    let k = m.energy.sqrt();
    let i = Complex64::i();
    let ik = i * k;
    let tail = i * m.m21 / k;
    // plane-wave basis change: N = W(right)⁻¹ · M · W(left)
    let n22 = 0.5 * Complex64::from_polar(1.0, k * (right - left)) * (m.m11 + m.m22 - ik * m.m12 + tail);
    let n21 = 0.5 * Complex64::from_polar(1.0, k * (right + left)) * (m.m11 - m.m22 + ik * m.m12 + tail);
    (-n21 / n22, 1.0 / n22)
}

fn scatter_on_grid(grid: &Grid, energy: f64) -> ScatteringResult {
    let m = grid.transfer(energy);
    let (r, t) = amplitudes(&m, grid.left, grid.right);
    ScatteringResult {
        r,
        t,
        reflection: r.norm_sqr(),
        transmission: t.norm_sqr(),
        energy,
    }
}

pub fn total_transfer(p: &PotentialSpec, energy: f64, n_slabs: usize) -> Result<TransferMatrix> {
    Solver::with_slabs(n_slabs).total_transfer(p, energy)
}

pub fn scattering(p: &PotentialSpec, energy: f64, n_slabs: usize) -> Result<ScatteringResult> {
    Solver::with_slabs(n_slabs).scattering(p, energy)
}

pub fn reflection_at_zero(p: &PotentialSpec, n_slabs: usize) -> Result<ZeroEnergyLimit> {
    Solver::with_slabs(n_slabs).reflection_at_zero(p)
}
