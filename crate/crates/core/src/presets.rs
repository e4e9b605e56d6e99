//! Registry of figure presets.
//!
//! | preset | family | abscissa | fixed | E | engine |
//! |---|---|---|---|---|---|
//! | `fig1b` | dddp | u1 ∈ [0.01, 0.99/a] | a ∈ {0.5, 1, 2}, u2 = u1/(1 − u1 a) | 0 | analytic |
//! | `fig2a` | scarf2 | q ∈ [−0.5, 3] | s = 0.2 | 0.01 | analytic |
//! | `fig2b` | scarf2 | s ∈ [0, 1] | q ∈ {1.01, 0.03, −0.03, 1.97}, and q = 1 at E = 0 as the tanh²πs reference | 0.01 | analytic |
//! | `fig3` | scarf2 | x ∈ [−10, 10] | s = 0.2, n = q ∈ {0, 1, 2} | 0 | eigenfunction |
//! | `fig4a`, `fig4b` | square-wb | q ∈ [0, 3] | w = 1, u1 = u2 = q², a = 2 / a = 0 | 0.01 | numeric |
//! | `fig5a`, `fig5b` | sin2-wb | q ∈ [0, 7] | w = 1, a = 1, u1 = q², u2 = η u1, η = 1.5 / η = 0.1 | 0.01 | numeric |
//!
//! Every scan has [`PRESET_POINTS`] points. The sin² range reaches q = 7 so
//! that the isolated low-reflection dip of the weak-barrier case near
//! q ≈ 6.1 is on the grid.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::export::{self, Format};
use crate::scarf::ScarfParams;
use crate::sweep::{sweep, wavefunction_table, Engine, Family, SweepSpec, SweepTable, WavefunctionTable};

pub const PRESET_POINTS: usize = 600;
pub const PRESET_NAMES: [&str; 8] = ["fig1b", "fig2a", "fig2b", "fig3", "fig4a", "fig4b", "fig5a", "fig5b"];

/// R below this counts as the low-reflection band.
pub const BAND_THRESHOLD: f64 = 0.1;
/// An isolated minimum of R counts as low reflection below this.
pub const DIP_THRESHOLD: f64 = 0.9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum PresetItem {
    Sweep(SweepSpec),
    Wavefunction {
        s: f64,
        q: f64,
        n: usize,
        range: (f64, f64),
        points: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum PresetOutput {
    Sweep(SweepTable),
    Wavefunction(WavefunctionTable),
}

impl PresetOutput {
    pub fn as_sweep(&self) -> Option<&SweepTable> {
        match self {
            Self::Sweep(t) => Some(t),
            Self::Wavefunction(_) => None,
        }
    }

    pub fn as_wavefunction(&self) -> Option<&WavefunctionTable> {
        match self {
            Self::Wavefunction(t) => Some(t),
            Self::Sweep(_) => None,
        }
    }
}

/// File stems and parameter grids of a preset.
pub fn preset_items(name: &str) -> Result<Vec<(String, PresetItem)>> {
    let n = PRESET_POINTS;
    let items = match name {
        "fig1b" => [0.5, 1.0, 2.0]
            .iter()
            .map(|&a| {
                let spec = SweepSpec::new(Family::DeltaPair, "u1", (0.01, 0.99 / a), n)
                    .param("a", a)
                    .energy(0.0)
                    .engine(Engine::Analytic);
                (format!("fig1b_a{a}"), PresetItem::Sweep(spec))
            })
            .collect(),
        "fig2a" => vec![(
            "fig2a".into(),
            PresetItem::Sweep(
                SweepSpec::new(Family::ScarfII, "q", (-0.5, 3.0), n)
                    .param("s", 0.2)
                    .engine(Engine::Analytic),
            ),
        )],
        "fig2b" => {
            let mut items: Vec<(String, PresetItem)> = [1.01, 0.03, -0.03, 1.97]
                .iter()
                .map(|&q| {
                    let spec = SweepSpec::new(Family::ScarfII, "s", (0.0, 1.0), n)
                        .param("q", q)
                        .engine(Engine::Analytic);
                    (format!("fig2b_q{q}"), PresetItem::Sweep(spec))
                })
                .collect();
            let limit = SweepSpec::new(Family::ScarfII, "s", (0.0, 1.0), n)
                .param("q", 1.0)
                .energy(0.0)
                .engine(Engine::Analytic);
            items.push(("fig2b_limit".into(), PresetItem::Sweep(limit)));
            items
        }
        "fig3" => (0..3)
            .map(|q| {
                let item = PresetItem::Wavefunction {
                    s: 0.2,
                    q: q as f64,
                    n: q,
                    range: (-10.0, 10.0),
                    points: n,
                };
                (format!("fig3_q{q}"), item)
            })
            .collect(),
        "fig4a" | "fig4b" => {
            let a = if name == "fig4a" { 2.0 } else { 0.0 };
            let spec = SweepSpec::new(Family::SquareWellBarrier, "q", (0.0, 3.0), n)
                .param("a", a)
                .param("w", 1.0);
            vec![(name.to_string(), PresetItem::Sweep(spec))]
        }
        "fig5a" | "fig5b" => {
            let eta = if name == "fig5a" { 1.5 } else { 0.1 };
            let spec = SweepSpec::new(Family::SinSquaredWellBarrier, "q", (0.0, 7.0), n)
                .param("a", 1.0)
                .param("w", 1.0)
                .param("eta", eta);
            vec![(name.to_string(), PresetItem::Sweep(spec))]
        }
        _ => return Err(Error::UnknownPreset(name.to_string())),
    };
    Ok(items)
}

pub fn run_preset(name: &str) -> Result<Vec<(String, PresetOutput)>> {
    preset_items(name)?
        .into_iter()
        .map(|(stem, item)| {
            let out = match item {
                PresetItem::Sweep(spec) => PresetOutput::Sweep(sweep(&spec)?),
                PresetItem::Wavefunction { s, q, n, range, points } => {
                    PresetOutput::Wavefunction(wavefunction_table(&ScarfParams::new(s, q)?, n, range, points)?)
                }
            };
            Ok((stem, out))
        })
        .collect()
}

/// Runs a preset and writes one CSV per table into `dir`.
pub fn write_preset(name: &str, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|source| Error::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    run_preset(name)?
        .into_iter()
        .map(|(stem, out)| {
            let path = dir.join(format!("{stem}.csv"));
            match &out {
                PresetOutput::Sweep(t) => export::export(t, &path, Format::Csv)?,
                PresetOutput::Wavefunction(t) => export::write_wavefunction_csv(t, &path)?,
            }
            Ok(path)
        })
        .collect()
}

/// First maximal run of consecutive records with R < `threshold`, as the
/// abscissae of its first and last record.
pub fn low_reflection_band(table: &SweepTable, threshold: f64) -> Option<(f64, f64)> {
    let recs = &table.records;
    let start = recs.iter().position(|r| r.reflection < threshold)?;
    let len = recs[start..].iter().take_while(|r| r.reflection < threshold).count();
    Some((recs[start].param, recs[start + len - 1].param))
}

/// Where a scan reflects least away from the weak-potential edge.
///
/// The deepest interior local minimum of R below [`DIP_THRESHOLD`] when one
/// exists, otherwise the upper edge of the [`BAND_THRESHOLD`] band.
pub fn low_reflection_location(table: &SweepTable) -> Option<f64> {
    let recs = &table.records;
    let dip = recs
        .windows(3)
        .filter(|w| w[1].reflection < w[0].reflection && w[1].reflection < w[2].reflection)
        .map(|w| w[1])
        .filter(|r| r.reflection < DIP_THRESHOLD)
        .min_by(|a, b| a.reflection.total_cmp(&b.reflection));
    match dip {
        Some(r) => Some(r.param),
        None => low_reflection_band(table, BAND_THRESHOLD).map(|(_, hi)| hi),
    }
}
