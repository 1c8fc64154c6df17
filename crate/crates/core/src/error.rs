use thiserror::Error;

/// Errors surfaced by the exact-arithmetic kernel.
///
/// `Internal` is reserved for violated invariants that signal a bug in this
/// crate (for example a coefficient sum that fails to reduce to a rational
/// integer), never for bad user data.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("division error: {0}")]
    Division(String),

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("truncation depth insufficient: {0}")]
    DepthInsufficient(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
