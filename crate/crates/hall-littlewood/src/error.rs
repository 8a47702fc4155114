use exact_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HlError {
    #[error("{lambda} / {mu} is not a {kind} strip")]
    NotAStrip { lambda: String, mu: String, kind: &'static str },
    #[error("coincident variable values at positions {0} and {1}")]
    CoincidentVariables(usize, usize),
    #[error("{0} variables exceed the permutation-sum limit")]
    TooManyVariables(usize),
    #[error("exponent list has length {exponents} but the alphabet has {variables} variables")]
    LengthMismatch { exponents: usize, variables: usize },
    #[error(transparent)]
    Core(#[from] CoreError),
}
