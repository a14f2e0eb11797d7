//! CSV emission: UTF-8, LF line endings, `,` separator, `#`-prefixed header
//! comments carrying the run manifest. Identical configuration and flags
//! produce byte-identical files, except for the timestamp line, which
//! `--no-timestamp` suppresses.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use crate::error::CliError;

/// Everything needed to reproduce a run, embedded in every output header.
pub struct RunManifest {
    pub command: String,
    pub config_path: PathBuf,
    pub config_json: String,
    pub overrides: Vec<String>,
    pub out_path: PathBuf,
    /// `None` when `--no-timestamp` was given.
    pub timestamp: Option<u64>,
}

impl RunManifest {
    pub fn new(
        config_path: &Path,
        config_json: &str,
        overrides: &[String],
        out_path: &Path,
        no_timestamp: bool,
    ) -> Self {
        let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
        let timestamp = if no_timestamp {
            None
        } else {
            Some(
                SystemTime::now()
                    .duration_since(UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0),
            )
        };
        RunManifest {
            command,
            config_path: config_path.to_path_buf(),
            config_json: config_json.to_string(),
            overrides: overrides.to_vec(),
            out_path: out_path.to_path_buf(),
            timestamp,
        }
    }

    pub fn header(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("# stratwave {}\n", env!("CARGO_PKG_VERSION")));
        s.push_str(&format!("# command: {}\n", self.command));
        s.push_str(&format!("# config: {}\n", self.config_path.display()));
        s.push_str(&format!("# config_json: {}\n", self.config_json));
        let ov = if self.overrides.is_empty() {
            "none".to_string()
        } else {
            self.overrides.join(" ")
        };
        s.push_str(&format!("# overrides: {ov}\n"));
        s.push_str(&format!("# output: {}\n", self.out_path.display()));
        if let Some(t) = self.timestamp {
            s.push_str(&format!("# timestamp: {t} (unix seconds)\n"));
        }
        s
    }
}

/// Writes a CSV file: manifest comments, a `# columns:` line, the column
/// row, then the data rows. Floats must already be rendered with `{}`
/// (shortest round-trip representation) by the caller.
pub fn write_csv(
    manifest: &RunManifest,
    columns: &[&str],
    rows: &[Vec<String>],
) -> Result<(), CliError> {
    let mut body = manifest.header();
    body.push_str(&format!("# columns: {}\n", columns.join(",")));
    body.push_str(&columns.join(","));
    body.push('\n');
    for row in rows {
        debug_assert_eq!(row.len(), columns.len());
        body.push_str(&row.join(","));
        body.push('\n');
    }
    let mut f = fs::File::create(&manifest.out_path)?;
    f.write_all(body.as_bytes())?;
    Ok(())
}

pub fn fmt_f64(x: f64) -> String {
    // Normalise -0.0 so sign noise never leaks into the output.
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x}")
}
