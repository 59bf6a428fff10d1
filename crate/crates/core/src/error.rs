use std::path::PathBuf;
use thiserror::Error;

/// Crate-wide error type.
///
/// Variants are grouped by whether they describe bad input (files, flags,
/// malformed data) or an internal numeric/state failure; `is_user_error`
/// drives the CLI exit-code contract (2 for input errors, 1 otherwise).
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {msg}")]
    FileFormat { path: PathBuf, msg: String },

    #[error("line {line}: {msg}")]
    CsvRow { line: u64, msg: String },

    #[error("labeling error: {0}")]
    Label(String),

    #[error("model format: {0}")]
    ModelFormat(String),

    #[error("model format version {found} not supported (expected {expected})")]
    ModelVersion { found: u32, expected: u32 },
}

impl Error {
    /// Errors caused by user-supplied input or flags (CLI exit code 2).
    pub fn is_user_error(&self) -> bool {
        match self {
            Error::Io { .. }
            | Error::FileFormat { .. }
            | Error::CsvRow { .. }
            | Error::Label(_)
            | Error::Parameter(_)
            | Error::ModelFormat(_)
            | Error::ModelVersion { .. } => true,
            Error::Dimension(_) | Error::NonFinite(_) | Error::Numeric(_) => false,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn file_format(path: impl Into<PathBuf>, msg: impl Into<String>) -> Self {
        Error::FileFormat {
            path: path.into(),
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
