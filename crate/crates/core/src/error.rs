use thiserror::Error;

/// Errors raised by the algebra and combinatorics routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The request exceeds a desk-scale cap.
    #[error("resource limit: {what} = {requested} exceeds the cap {limit} (override with QSYMQ_MAX_N)")]
    Resource {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
