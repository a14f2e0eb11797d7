//! Configuration loading: JSON file plus dotted-path `--set` overrides.
//!
//! The file is a JSON object with keys `layer_a {eps_rel, mu_rel}`,
//! `layer_b {eps_rel, mu_rel}`, `h`, `rho`,
//! `lorentz {plasma_ratio, loss_ratio, mu_rel}`, and
//! `polarization` (`"TE"` or `"TM"`). All numbers are IEEE-754 doubles in
//! decimal text; serialization round-trips losslessly (shortest
//! representation that recovers the exact double).

use std::fs;
use std::path::Path;

use serde_json::Value;
use stratwave_core::MediumConfig;

use crate::error::CliError;

pub struct LoadedConfig {
    pub config: MediumConfig,
    /// Canonical one-line JSON rendering, embedded in output manifests.
    pub canonical_json: String,
}

pub fn load(path: &Path, overrides: &[String]) -> Result<LoadedConfig, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    from_value(value, overrides)
}

pub fn from_value(mut value: Value, overrides: &[String]) -> Result<LoadedConfig, CliError> {
    for spec in overrides {
        apply_override(&mut value, spec)?;
    }
    let config: MediumConfig = serde_json::from_value(value)
        .map_err(|e| CliError::Config(format!("invalid configuration: {e}")))?;
    let canonical_json = canonical(&config);
    Ok(LoadedConfig { config, canonical_json })
}

pub fn canonical(config: &MediumConfig) -> String {
    serde_json::to_string(config).expect("configuration serializes")
}

/// Applies one `key=value` override; `key` is a dotted path that must
/// already exist in the configuration (typos are configuration errors).
fn apply_override(root: &mut Value, spec: &str) -> Result<(), CliError> {
    let (key, raw) = spec
        .split_once('=')
        .ok_or_else(|| CliError::Config(format!("--set expects KEY=VALUE, got `{spec}`")))?;
    let mut cur = root;
    for part in key.split('.') {
        cur = cur
            .as_object_mut()
            .and_then(|o| o.get_mut(part))
            .ok_or_else(|| CliError::Config(format!("unknown configuration key `{key}`")))?;
    }
    // Numbers in decimal or scientific notation; anything else is a string
    // (e.g. polarization=TM).
    *cur = match raw.parse::<f64>() {
        Ok(x) => serde_json::json!(x),
        Err(_) => Value::String(raw.to_string()),
    };
    Ok(())
}
