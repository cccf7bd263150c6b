use thiserror::Error;

/// Errors raised by constructors and partial operations.
///
/// Law failures are not errors: they are reported through [`crate::Report`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed structure: {0}")]
    Structure(String),
    #[error("precondition violated: {0}")]
    Domain(String),
    #[error("bound exceeded: {0}")]
    Bound(String),
    #[error("internal invariant broken: {0}")]
    Invariant(String),
    #[error("refused: {0}")]
    Refused(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn structure<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Structure(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
