use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A computation would exceed a configured size bound.
    #[error("resource limit: {what} exceeds bound {bound}")]
    ResourceLimit { what: String, bound: u64 },

    /// The requested check is not defined for these parameters.
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    /// A verified statement failed on a concrete instance.
    #[error("counterexample: {0}")]
    Counterexample(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn limit(what: impl Into<String>, bound: u64) -> Self {
        Error::ResourceLimit {
            what: what.into(),
            bound,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
