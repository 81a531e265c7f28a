use thiserror::Error;

/// Errors raised by the enumeration engine, the polynomial and series
/// arithmetic, and the verification harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain an operation is defined on
    /// (n = 0, n above an enumeration cap, incompatible selectors, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A computed value violated an integrality or consistency guarantee.
    #[error("integrity error: {0}")]
    Integrity(String),

    /// A word that is not a (signed) permutation.
    #[error("invalid permutation word: {0}")]
    InvalidWord(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("malformed polynomial: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
