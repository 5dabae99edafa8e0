use std::path::PathBuf;
use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, bad input data or an argument outside a formula's domain.
    #[error(transparent)]
    Library(#[from] degree_indices::Error),

    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 for usage and domain errors, 3 for I/O errors.
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Library(_) | CliError::Usage(_) => ExitCode::from(2),
            CliError::Io { .. } => ExitCode::from(3),
        }
    }
}
