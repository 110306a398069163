use thiserror::Error;

/// Errors raised by graph construction, queries and searches.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An operation would exceed the capacity of the representation or of an algorithm.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// A parameter or input falls outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// The requested enclosure width is below what floating point can certify.
    #[error("precision error: {0}")]
    Precision(String),
    /// An input failed a structural validation (e.g. a partition that is not equitable).
    #[error("validation error: {0}")]
    Validation(String),
    /// Malformed serialized input.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn capacity<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Capacity(msg.into()))
}
