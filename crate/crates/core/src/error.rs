use thiserror::Error;

/// Errors raised by the combinatorial and character routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input.
    #[error("syntax error: {0}")]
    Syntax(String),
    /// Well-formed input that does not describe a valid object
    /// (for example a sequence that is not weakly decreasing).
    #[error("invalid value: {0}")]
    Validity(String),
    /// A parameter outside its domain, such as a characteristic that is
    /// neither 0 nor prime.
    #[error("domain error: {0}")]
    Domain(String),
    /// An operation was called outside its hypotheses.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// The rank-3 character oracle has no trusted restricted base case.
    #[error("unsupported restricted base case: {0}")]
    UnsupportedBaseCase(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
