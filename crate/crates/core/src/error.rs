use thiserror::Error;

/// Failures shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word has no {0}")]
    EmptyWord(&'static str),
    #[error("invalid digit {0:?} in word literal (expected 0 or 1)")]
    InvalidDigit(char),
    #[error("malformed sequence literal {0:?}")]
    MalformedSequence(String),
    #[error("invalid number {0:?}")]
    InvalidNumber(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("no root in range")]
    NoRootInRange,
    #[error("digits unreliable beyond index {index}; raise the precision or supply a symbolic expansion")]
    UnreliableDigits { index: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
