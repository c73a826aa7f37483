//! Run configuration: defaults, an optional TOML file, then flag overrides.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::CliError;

pub const CONFIG_ENV: &str = "MAXSURF_CONFIG";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Highest Fourier mode kept from sampled input.
    pub truncation: usize,
    /// Largest `|k|` in the series conditions; twice the curve's modes if unset.
    pub k_max: Option<usize>,
    pub scan_points: usize,
    pub bracket: [f64; 2],
    /// `[n_rho, n_theta]` for meshes and maps.
    pub grid: [usize; 2],
    /// Radial range for meshes and maps; the sampling range of the annulus if unset.
    pub rho: Option<[f64; 2]>,
    /// Radial subdivisions per ray in the singular-set search.
    pub singular_subdivisions: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            truncation: maxsurf_core::DEFAULT_TRUNCATION,
            k_max: None,
            scan_points: 512,
            bracket: [0.01, 100.0],
            grid: [64, 32],
            rho: None,
            singular_subdivisions: 256,
        }
    }
}

impl Config {
    /// Reads `explicit`, else the file named by `MAXSURF_CONFIG`, else defaults.
    pub fn load(explicit: Option<&Path>) -> Result<Self, CliError> {
        let path = explicit
            .map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
        match path {
            Some(p) => Self::parse(&crate::read(&p)?).map_err(|e| CliError::parse(&p, e)),
            None => Ok(Self::default()),
        }
    }

    pub fn parse(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }
}

/// `"lo,hi"`
pub fn parse_pair(text: &str) -> Result<[f64; 2], String> {
    let (a, b) = text.split_once(',').ok_or_else(|| format!("expected lo,hi, got {text:?}"))?;
    let lo: f64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let hi: f64 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if !(lo < hi) {
        return Err(format!("expected lo < hi, got {text:?}"));
    }
    Ok([lo, hi])
}

/// `"NRHOxNTHETA"`, e.g. `64x32`.
pub fn parse_grid(text: &str) -> Result<[usize; 2], String> {
    let (a, b) = text.split_once('x').ok_or_else(|| format!("expected NxM, got {text:?}"))?;
    let n: usize = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let m: usize = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if n < 2 || m < 3 {
        return Err(format!("grid {text:?} is too small"));
    }
    Ok([n, m])
}
