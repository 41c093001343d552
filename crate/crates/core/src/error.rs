use thiserror::Error;

/// Errors raised by kernel operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported substitution pattern: {0}")]
    UnsupportedPattern(String),
    #[error("no derivative rule for {0}")]
    UnevaluatedDerivative(String),
    #[error("series expansion failed: {0}")]
    Series(String),
    #[error("function registration failed: {0}")]
    Registration(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("linear system has no unique solution: {0}")]
    NoUniqueSolution(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
