//! Crate-wide error type.

/// Errors produced by the numerical routines.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Input outside the validated parameter range.
    #[error("range error: {0}")]
    Range(String),

    /// An iteration failed to converge; the message records the last
    /// bracket or iterate state.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// Inconsistent configuration (empty basis, degenerate cutoffs, ...).
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }
    pub(crate) fn convergence(msg: impl Into<String>) -> Self {
        Error::Convergence(msg.into())
    }
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
