//! JSON curve specifications.
//!
//! ```json
//! {"kind": "bjorling",
//!  "gamma_planar": {"fourier": []}, "gamma_height": {"fourier": []},
//!  "l_planar": {"fourier": [[1, 1.0, 0.0]]}, "l_height": {"fourier": [[0, 1.0, 0.0]]}}
//!
//! {"kind": "curve", "label": "catenoid", "expected_r0": 0.5,
//!  "planar": {"fourier": [[1, -0.75, 0.0]]},
//!  "height": {"samples": [[-0.693, 0.0], [-0.693, 0.0], [-0.693, 0.0], [-0.693, 0.0]]}}
//! ```
//!
//! Fourier entries are `[n, re, im]` for the coefficient of `e^{inθ}`;
//! samples are `M` equispaced values starting at `θ = 0`, `M` a power of two.

use std::path::Path;

use maxsurf_core::fourier::fourier_analyze;
use maxsurf_core::{BjorlingData, CircleSamples, Complex64, Error, FourierSeries};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum Component {
    Fourier(Vec<(i64, f64, f64)>),
    Samples(Vec<(f64, f64)>),
}

impl Component {
    /// Sampled components keep modes up to `min(truncation, (M - 4)/4)`.
    pub fn to_series(&self, truncation: usize) -> Result<FourierSeries, String> {
        match self {
            Component::Fourier(entries) => {
                let mut modes: Vec<(i64, Complex64)> = Vec::with_capacity(entries.len());
                for &(n, re, im) in entries {
                    if modes.iter().any(|(m, _)| *m == n) {
                        return Err(format!("mode {n} listed twice"));
                    }
                    modes.push((n, Complex64::new(re, im)));
                }
                Ok(FourierSeries::from_modes(&modes))
            }
            Component::Samples(values) => {
                let values = values.iter().map(|&(re, im)| Complex64::new(re, im)).collect();
                let samples = CircleSamples::new(values).map_err(|e| e.to_string())?;
                let band = truncation.min(samples.len().saturating_sub(4) / 4);
                Ok(fourier_analyze(&samples).truncated(band).0)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum CurveSpec {
    Bjorling {
        gamma_planar: Component,
        gamma_height: Component,
        l_planar: Component,
        l_height: Component,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
    },
    Curve {
        planar: Component,
        height: Component,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        expected_r0: Option<f64>,
    },
}

/// A spec converted to Fourier data.
#[derive(Debug, Clone, PartialEq)]
pub enum Parsed {
    Bjorling(BjorlingData),
    /// Planar and height series; spacelikeness is checked by the caller.
    Curve {
        planar: FourierSeries,
        height: FourierSeries,
        expected_r0: Option<f64>,
    },
}

impl CurveSpec {
    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    pub fn parse(&self, truncation: usize) -> Result<Parsed, String> {
        match self {
            CurveSpec::Bjorling {
                gamma_planar,
                gamma_height,
                l_planar,
                l_height,
                ..
            } => {
                let data = BjorlingData::new(
                    gamma_planar.to_series(truncation)?,
                    gamma_height.to_series(truncation)?,
                    l_planar.to_series(truncation)?,
                    l_height.to_series(truncation)?,
                )
                .map_err(|e| e.to_string())?;
                Ok(Parsed::Bjorling(data))
            }
            CurveSpec::Curve {
                planar,
                height,
                expected_r0,
                ..
            } => {
                let height = height.to_series(truncation)?;
                let defect = height.reality_defect();
                if defect > 1e-10 * height.max_abs_coeff().max(1.0) {
                    return Err(Error::NotReal(defect).to_string());
                }
                Ok(Parsed::Curve {
                    planar: planar.to_series(truncation)?,
                    height,
                    expected_r0: *expected_r0,
                })
            }
        }
    }
}

/// Reads and converts a spec file; any failure is a parse error.
pub fn load(path: &Path, truncation: usize) -> Result<Parsed, CliError> {
    let text = crate::read(path)?;
    CurveSpec::from_json(&text)
        .and_then(|spec| spec.parse(truncation))
        .map_err(|e| CliError::parse(path, e))
}
