//! CSV and JSON output of sweep and wavefunction tables.
//!
//! Floats are written with 12 significant digits, lines end in `\n`, and the
//! output depends on nothing but the table, so identical tables give
//! identical bytes.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sweep::{SweepTable, WavefunctionTable};

pub const CSV_HEADER: &str = "param,E,R,T,converged";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            _ => Err(Error::InvalidSweep(format!(
                "unknown format `{s}`, expected csv or json"
            ))),
        }
    }
}

/// `v` to 12 significant digits in scientific notation.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.11e}")
}

pub fn csv_string(table: &SweepTable) -> String {
    let mut out = String::with_capacity(64 * (table.records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in &table.records {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            fmt_float(r.param),
            fmt_float(r.energy),
            fmt_float(r.reflection),
            fmt_float(r.transmission),
            r.converged
        );
    }
    out
}

pub fn json_string(table: &SweepTable) -> String {
    let mut s = serde_json::to_string_pretty(table).expect("sweep tables always serialise");
    s.push('\n');
    s
}

pub fn wavefunction_csv_string(table: &WavefunctionTable) -> String {
    let mut out = String::from("x,psi\n");
    for (x, psi) in table.xs.iter().zip(&table.psi) {
        let _ = writeln!(out, "{},{}", fmt_float(*x), fmt_float(*psi));
    }
    out
}

pub fn export(table: &SweepTable, path: &Path, format: Format) -> Result<()> {
    let text = match format {
        Format::Csv => csv_string(table),
        Format::Json => json_string(table),
    };
    write(path, &text)
}

pub fn write_wavefunction_csv(table: &WavefunctionTable, path: &Path) -> Result<()> {
    write(path, &wavefunction_csv_string(table))
}

pub fn read_json(path: &Path) -> Result<SweepTable> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
