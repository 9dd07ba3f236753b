//! Optional JSON config file. Every field may be omitted; command-line flags
//! override it and built-in defaults fill whatever is left.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::ReportError;

#[derive(Clone, Debug, Default, PartialEq, Deserialize, Serialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub figure: FigureConfig,
    pub estimate: EstimateConfig,
    pub spectrum: SpectrumConfig,
}

#[derive(Clone, Debug, Default, PartialEq, Deserialize, Serialize)]
#[serde(default, deny_unknown_fields)]
pub struct FigureConfig {
    pub dmin: Option<u32>,
    pub dmax: Option<u32>,
    pub p: Option<f64>,
    /// `start:stop:count`.
    pub eps_grid: Option<String>,
    pub format: Option<String>,
    pub paper_overlay: Option<bool>,
    pub dense_step: Option<f64>,
    pub grid: Option<usize>,
    pub measure: Option<String>,
    pub fourier_dim: Option<f64>,
    pub frostman_dim: Option<f64>,
    pub sobolev_dim: Option<f64>,
    pub ambient_dim: Option<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Deserialize, Serialize)]
#[serde(default, deny_unknown_fields)]
pub struct EstimateConfig {
    pub theta: Option<Vec<f64>>,
    pub jmin: Option<u32>,
    pub jmax: Option<u32>,
    pub nodes_per_unit: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Deserialize, Serialize)]
#[serde(default, deny_unknown_fields)]
pub struct SpectrumConfig {
    pub grid: Option<usize>,
}

impl Config {
    pub fn load(path: &str) -> Result<Self, ReportError> {
        let text = std::fs::read_to_string(path).map_err(|source| ReportError::Io { path: path.to_string(), source })?;
        serde_json::from_str(&text)
            .map_err(|e| ReportError::BadParameter { name: "--config".into(), reason: format!("{path}: {e}") })
    }
}

/// Hex SHA-256 of the JSON serialization of the effective parameters.
pub fn config_hash<P: Serialize>(params: &P) -> String {
    let json = serde_json::to_vec(params).expect("parameters serialize");
    Sha256::digest(&json).iter().map(|b| format!("{b:02x}")).collect()
}
