use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const CONFIG_ENV: &str = "BARUT_KIT_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub alpha_inverse: f64,
    pub electron_mass_mev: f64,
    pub tolerance: f64,
    /// Box side used when a mode set omits "L"; 16/m when unset.
    pub box_length: Option<f64>,
    pub output_format: Option<OutputFormat>,
}

impl Default for Config {
    fn default() -> Self {
        Self { alpha_inverse: 137.03, electron_mass_mev: 0.511, tolerance: 1e-10, box_length: None, output_format: None }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), CliError> {
        let positive = [("alpha_inverse", self.alpha_inverse), ("electron_mass_mev", self.electron_mass_mev), ("tolerance", self.tolerance)];
        for (name, v) in positive.into_iter().chain(self.box_length.map(|l| ("box_length", l))) {
            if !(v > 0.0) || !v.is_finite() {
                return Err(CliError::Usage(format!("config: {name} must be positive and finite, got {v}")));
            }
        }
        if self.tolerance >= 1e-6 {
            return Err(CliError::Usage(format!("config: tolerance must be below 1e-6, got {}", self.tolerance)));
        }
        Ok(())
    }

    pub fn box_length_for(&self, m: f64) -> f64 {
        self.box_length.unwrap_or(16.0 / m)
    }
}

/// BARUT_KIT_CONFIG wins over --config.
pub fn config_path(flag: Option<&Path>) -> Option<PathBuf> {
    match std::env::var_os(CONFIG_ENV) {
        Some(p) if !p.is_empty() => Some(PathBuf::from(p)),
        _ => flag.map(Path::to_path_buf),
    }
}

pub fn load(flag: Option<&Path>) -> Result<Config, CliError> {
    let Some(path) = config_path(flag) else {
        return Ok(Config::default());
    };
    let text = std::fs::read_to_string(&path).map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    let cfg: Config = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("invalid config {}: {e}", path.display())))?;
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_valid() {
        let c = Config::default();
        c.validate().unwrap();
        assert_eq!(c.box_length_for(2.0), 8.0);
    }

    #[test]
    fn rejects_loose_tolerance() {
        let c = Config { tolerance: 1e-3, ..Config::default() };
        assert!(c.validate().is_err());
    }

    #[test]
    fn partial_file() {
        let c: Config = serde_json::from_str(r#"{"alpha_inverse": 137.0359895, "output_format": "csv"}"#).unwrap();
        assert_eq!(c.electron_mass_mev, 0.511);
        assert_eq!(c.output_format, Some(OutputFormat::Csv));
        assert!(serde_json::from_str::<Config>(r#"{"alpha": 1}"#).is_err());
    }
}
