//! Reflection and transmission of one-dimensional well-barrier potentials,
//! half bound states at zero energy, and the low-reflection threshold anomaly.
//!
//! Units are fixed by ℏ²/(2μ) = 1, so energies are E = k² and the stationary
//! equation is ψ″ + (E − V)ψ = 0.
//!
//! Two independent routes are provided for every solvable case:
//!
//! * closed forms in [`dddp`] (double Dirac delta) and [`scarf`] (Scarf II);
//! * a family-agnostic transfer-matrix engine in [`scatter`], with zero-energy
//!   and bound-state analysis in [`spectral`].
//!
//! [`sweep`], [`presets`] and [`export`] produce the parameter scans and
//! figure data, and [`config`] reads `key = value` files. The `scatter1d`
//! binary is a thin front end over them.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod dddp;
pub mod error;
pub mod export;
pub mod grid;
pub mod jacobi;
pub mod potential;
pub mod presets;
pub mod scarf;
pub mod scatter;
pub mod spectral;
pub mod sweep;
pub mod transfer;

pub use error::{Error, Result};
pub use grid::SlabRule;
pub use potential::PotentialSpec;
pub use scatter::{ScatteringResult, Solver, ZeroEnergyLimit};
pub use spectral::{HbsRoot, ZeroEnergyProfile};
pub use sweep::{Engine, Family, SweepSpec, SweepTable};
pub use transfer::TransferMatrix;
