//! Subcommand implementations.

pub mod permittivity;
pub mod profile;
pub mod scan;
pub mod trace;
pub mod validate;

use std::path::{Path, PathBuf};

use crate::config::LoadedConfig;
use crate::error::CliError;
use crate::output::RunManifest;

pub struct Ctx {
    pub loaded: LoadedConfig,
    pub config_path: PathBuf,
    pub overrides: Vec<String>,
    pub out: Option<PathBuf>,
    pub no_timestamp: bool,
}

impl Ctx {
    pub fn out_path(&self, default_name: &str) -> PathBuf {
        self.out.clone().unwrap_or_else(|| PathBuf::from(default_name))
    }

    pub fn manifest(&self, out_path: &Path) -> RunManifest {
        RunManifest::new(
            &self.config_path,
            &self.loaded.canonical_json,
            &self.overrides,
            out_path,
            self.no_timestamp,
        )
    }

    /// Validates the configuration invariants; failures are configuration
    /// errors (exit 2) for every subcommand except `validate`, which reports
    /// them in its table instead.
    pub fn validated(&self) -> Result<&stratwave_core::MediumConfig, CliError> {
        self.loaded
            .config
            .validate()
            .map_err(|e| CliError::Config(e.to_string()))?;
        Ok(&self.loaded.config)
    }
}

pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n <= 1 {
        return vec![lo];
    }
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}
