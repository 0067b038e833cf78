use std::path::PathBuf;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is numerically rank deficient")]
    NumericalRank,

    #[error("search space too large: {size} hypotheses exceeds limit {limit}")]
    SearchSpaceTooLarge { size: u128, limit: u128 },

    #[error("value out of range: {0}")]
    Range(String),

    #[error("unsupported format for {path}: {reason}")]
    Format { path: PathBuf, reason: String },

    #[error("{context} ({path})")]
    Io {
        context: String,
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("config parse error: {0}")]
    Config(String),

    #[error("data parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn io(context: impl Into<String>, path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            context: context.into(),
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
