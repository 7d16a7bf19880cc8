//! File formats, reports, and command dispatch for the `leibniz-ly` binary.
//! Everything the binary does is reachable through [`commands::execute`], so
//! tests can drive commands without spawning processes.

pub mod commands;
pub mod files;
pub mod report;

use thiserror::Error;

/// Errors that terminate a command with exit code 3.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn prefixed(self, prefix: &str) -> CliError {
        match self {
            CliError::Parse(m) => CliError::Parse(format!("{prefix}: {m}")),
            CliError::Usage(m) => CliError::Usage(format!("{prefix}: {m}")),
        }
    }
}
