use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the toolkit reports.
///
/// The variants fall into three groups that the command-line front end maps
/// onto exit codes: caller mistakes (1), I/O failures (2) and bad input data
/// (3). See [`Error::exit_code`].
#[derive(Debug, Error)]
pub enum Error {
    /// Two objective vectors (or a vector and a set) disagree on M.
    #[error("dimension mismatch: expected {expected} objectives, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// An argument violates an operation's contract.
    #[error("invalid argument: {0}")]
    Validation(String),

    /// A required piece of configuration is missing or inconsistent.
    #[error("configuration error: {0}")]
    Config(String),

    /// The input values themselves are unusable (NaN, nonpositive log values, ...).
    #[error("data error: {0}")]
    Data(String),

    /// The operation only supports a particular number of objectives.
    #[error("unsupported number of objectives: {found} (expected {expected})")]
    UnsupportedDimension { expected: usize, found: usize },

    /// A file parsed but its layout does not match the interchange format.
    #[error("format error: {0}")]
    Format(String),

    #[error("unsupported schema version {found} (supported: {supported})")]
    Version { found: i64, supported: i64 },

    #[error("I/O error on '{}': {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }

    pub(crate) fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code for this error: 1 validation, 2 I/O, 3 data.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::DimensionMismatch { .. } | Error::Validation(_) | Error::Config(_) => 1,
            Error::Io { .. } => 2,
            Error::Data(_)
            | Error::UnsupportedDimension { .. }
            | Error::Format(_)
            | Error::Version { .. } => 3,
        }
    }
}
