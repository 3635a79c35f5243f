//! Verification defaults, read from the file named by `CFDYN_CONFIG`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::CliError;

pub const CONFIG_ENV: &str = "CFDYN_CONFIG";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifyConfig {
    pub samples: usize,
    pub seed: u64,
    pub epsilon: f64,
    pub grid: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            samples: 10_000,
            seed: 1,
            epsilon: 1e-9,
            grid: 600,
        }
    }
}

impl VerifyConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    /// The file named by `CFDYN_CONFIG`, or the built-in defaults.
    pub fn load() -> Result<Self, CliError> {
        match std::env::var_os(CONFIG_ENV) {
            Some(p) => Self::from_file(Path::new(&p)),
            None => Ok(Self::default()),
        }
    }
}
