use std::io;

use thiserror::Error;

/// Exit codes: 0 success, 1 verification failure, 2 usage or validation,
/// 3 cap exceeded.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Cap(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Cap(_) => 3,
        }
    }

    pub fn is_broken_pipe(&self) -> bool {
        matches!(self, CliError::Io(e) if e.kind() == io::ErrorKind::BrokenPipe)
    }
}

impl From<cayley_core::Error> for CliError {
    fn from(e: cayley_core::Error) -> Self {
        match e {
            cayley_core::Error::CapExceeded { .. } => CliError::Cap(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}
