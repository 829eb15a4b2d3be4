//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand mismatch: sqrt({0}) and sqrt({1}) cannot be mixed")]
    RadicandMismatch(u64, u64),
    #[error("{0} is not square-free, cannot be used as a radicand")]
    NotSquareFree(u64),
    #[error("variable collision: {0}")]
    VariableCollision(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("integral looks divergent: {0}")]
    Divergent(String),
    #[error("pole point outside the coefficient field: {0}")]
    UnresolvedPoint(String),
    #[error("unimplemented: {0}")]
    Unimplemented(String),
    #[error("unbounded domain where a bounded one was expected: {0}")]
    Unbounded(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
