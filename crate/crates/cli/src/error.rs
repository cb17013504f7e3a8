use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("cannot parse curve spec {path}: {source}")]
    Parse {
        path: PathBuf,
        source: serde_json::Error,
    },

    #[error(transparent)]
    Math(#[from] ovalkit::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 for parse/validation errors, 3 for mathematical assertion failures,
    /// 4 for I/O errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } => 2,
            CliError::Math(ovalkit::Error::BoundViolation { .. }) => 3,
            CliError::Math(_) => 2,
            CliError::Io { .. } => 4,
        }
    }
}
