//! Parameter files.
//!
//! ```toml
//! name = "ex55"
//! m = 2
//! n = 3
//! w = "y^2 + y/x + x^3"
//! alpha = [-1, -1]
//! beta = [0, 1]
//! ```

use std::path::Path;

use lexval::valgroup::ValuePair;
use lexval::valuation::{SpecError, ValuationSpec};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::expr::{parse_ypoly, ParseError};

pub const EX52: &str = include_str!("../presets/ex52.toml");
pub const EX55: &str = include_str!("../presets/ex55.toml");

pub const PRESETS: [(&str, &str); 2] = [("ex52", EX52), ("ex55", EX55)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecConfig {
    pub name: String,
    pub m: usize,
    pub n: usize,
    pub w: String,
    pub alpha: [i64; 2],
    pub beta: [i64; 2],
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed parameter file: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("w: {0}")]
    W(#[from] ParseError),
    #[error("{0}")]
    Spec(#[from] SpecError),
    #[error("unknown preset {0:?} (known: ex52, ex55)")]
    UnknownPreset(String),
}

impl SpecConfig {
    pub fn from_toml(src: &str) -> Result<Self, ConfigError> {
        Ok(toml::from_str(src)?)
    }

    pub fn alpha(&self) -> ValuePair {
        ValuePair::new(self.alpha[0], self.alpha[1])
    }

    pub fn beta(&self) -> ValuePair {
        ValuePair::new(self.beta[0], self.beta[1])
    }

    /// Parses `w` and runs every parameter check.
    pub fn build(&self) -> Result<ValuationSpec, ConfigError> {
        let w = parse_ypoly(&self.w)?;
        Ok(ValuationSpec::new(self.m, self.n, w, self.alpha(), self.beta())?)
    }
}

pub fn preset_config(name: &str) -> Result<SpecConfig, ConfigError> {
    let (_, src) = PRESETS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| ConfigError::UnknownPreset(name.to_owned()))?;
    SpecConfig::from_toml(src)
}

pub fn read_config(path: &Path) -> Result<SpecConfig, ConfigError> {
    let src = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.display().to_string(),
        source,
    })?;
    SpecConfig::from_toml(&src)
}

/// Parses and validates a parameter file's contents.
pub fn load_spec(src: &str) -> Result<(SpecConfig, ValuationSpec), ConfigError> {
    let cfg = SpecConfig::from_toml(src)?;
    let spec = cfg.build()?;
    Ok((cfg, spec))
}
