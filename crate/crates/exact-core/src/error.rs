use thiserror::Error;

/// Errors raised by the exact arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("zero norm entry at basis index {0}")]
    ZeroNorm(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("t-binomial ({a} choose {b}) is undefined")]
    InvalidBinomial { a: i64, b: i64 },
    #[error("singular matrix")]
    Singular,
}
