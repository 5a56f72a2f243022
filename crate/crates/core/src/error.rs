use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("duplicate series id `{0}`")]
    DuplicateId(String),

    #[error("series `{id}` has {len} samples, at least {min} required")]
    TooShort { id: String, len: usize, min: usize },

    #[error("series `{id}` has a non-positive price {value} at sample {index}")]
    NonPositive {
        id: String,
        index: usize,
        value: f64,
    },

    #[error("series `{0}` is degenerate: zero volatility")]
    Degenerate(String),

    #[error("signal of length {len} is too short: {reason}")]
    SignalTooShort { len: usize, reason: String },

    #[error("invalid level count: {0}")]
    InvalidLevels(String),

    #[error("inconsistent decomposition: {0}")]
    InconsistentDecomposition(String),

    #[error("spectrum undefined: {0}")]
    SpectrumUndefined(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("series `{id}`: {source}")]
    Series {
        id: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Tags an error with the id of the series it came from.
    pub fn for_series(self, id: &str) -> Self {
        match self {
            e @ Error::Series { .. } => e,
            other => Error::Series {
                id: id.to_owned(),
                source: Box::new(other),
            },
        }
    }
}
