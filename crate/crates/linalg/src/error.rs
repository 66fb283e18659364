use thiserror::Error;

/// Errors raised by field parsing and subspace arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("modulus {0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("cannot parse field element {0:?}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
}
