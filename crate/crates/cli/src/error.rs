//! CLI error type with the documented exit-code map.

use std::fmt;

/// Exit codes: 1 generic failure, 2 configuration problem, 3 mode misuse,
/// 4 continuation failure, 5 inadmissible/non-decaying point.
#[derive(Debug)]
pub enum CliError {
    /// Configuration could not be read, parsed, overridden, or validated.
    Config(String),
    /// A subcommand was invoked on a configuration it does not apply to.
    Mode(String),
    /// Loss continuation failed or died before 10% of the requested range.
    Continuation(String),
    /// The requested point does not satisfy the two-sided decay conditions.
    Inadmissible(String),
    /// Validation report contains failures.
    Failed(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Mode(_) => 3,
            CliError::Continuation(_) => 4,
            CliError::Inadmissible(_) => 5,
            CliError::Failed(_) | CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Mode(m) => write!(f, "mode misuse: {m}"),
            CliError::Continuation(m) => write!(f, "continuation failure: {m}"),
            CliError::Inadmissible(m) => write!(f, "inadmissible point: {m}"),
            CliError::Failed(m) => write!(f, "{m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}
