//! CLI error wrapper mapping every failure onto the documented exit codes:
//! 2 for usage errors, 3 for data errors, 4 for numeric or degeneracy
//! errors.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    Numeric(neim_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Data(_) => 3,
            CliError::Numeric(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Data(msg) => f.write_str(msg),
            CliError::Numeric(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<neim_core::Error> for CliError {
    fn from(e: neim_core::Error) -> Self {
        use neim_core::Error::*;
        match e {
            // Malformed or inconsistent inputs.
            DimensionMismatch { .. }
            | TooFewObjectives { .. }
            | NonFinite { .. }
            | Empty { .. } => CliError::Data(e.to_string()),
            // Everything else is a numeric or degeneracy condition.
            _ => CliError::Numeric(e),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Data(e.to_string())
    }
}
