use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("invalid sampled potential: {0}")]
    InvalidSamples(&'static str),

    #[error("non-pointwise potential: delta functions have no value at a point, use delta_transfer")]
    NonPointwise,

    #[error("no effective q defined for the {0} family")]
    NoEffectiveQ(&'static str),

    #[error("energy {energy} outside the domain E > 0: {hint}")]
    EnergyDomain { energy: f64, hint: &'static str },

    #[error("no half bound state in this branch: u1*a = {u1a} must be < 1")]
    NoHbsBranch { u1a: f64 },

    #[error("parameters off the half-bound-state manifold (relative defect {defect:e})")]
    OffHbsManifold { defect: f64 },

    #[error("state index {n} out of range (at most {max})")]
    IndexOutOfRange { n: usize, max: usize },

    #[error("no closed form for the {0} family, use the numeric engine")]
    NoClosedForm(&'static str),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("parameter `{name}` is not defined for the {family} family")]
    UnknownParameter { family: &'static str, name: String },

    #[error("the {family} family needs parameter `{name}`")]
    MissingParameter { family: &'static str, name: &'static str },

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("unknown figure preset `{0}`")]
    UnknownPreset(String),

    #[error("bound-state passes disagree: left-to-right {forward:?}, right-to-left {reverse:?}")]
    DirectionMismatch { forward: Vec<f64>, reverse: Vec<f64> },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("config {path}, line {line}: {reason}")]
    Config { path: PathBuf, line: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn require(cond: bool, name: &'static str, value: f64, reason: &'static str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter { name, value, reason })
    }
}
