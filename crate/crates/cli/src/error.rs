use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: u64,
        message: String,
    },
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("label files differ in length: {left} vs {right} rows")]
    LengthMismatch { left: usize, right: usize },
    #[error("invalid arguments: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] pami_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Usage(_) => 2,
            CliError::LengthMismatch { .. } => 3,
            CliError::Core(e) => match e {
                pami_core::Error::LengthMismatch { .. } => 3,
                pami_core::Error::InvalidConfig(_)
                | pami_core::Error::InvalidK { .. }
                | pami_core::Error::InvalidSize { .. } => 2,
                _ => 1,
            },
        }
    }
}
