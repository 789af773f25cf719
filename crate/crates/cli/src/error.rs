use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Numerical(#[from] stiffgap_core::Error),

    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    /// 1 usage or configuration, 2 numerical failure, 3 internal consistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Numerical(stiffgap_core::Error::Inconsistent(_)) | CliError::Inconsistent(_) => 3,
            CliError::Numerical(stiffgap_core::Error::Domain { .. } | stiffgap_core::Error::InvalidArgument(_)) => 1,
            CliError::Numerical(_) => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
