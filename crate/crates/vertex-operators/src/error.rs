use exact_core::CoreError;
use hall_littlewood::HlError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VertexError {
    #[error("degree {requested} exceeds the weight cap {cap}")]
    WindowTooSmall { requested: usize, cap: usize },
    #[error("operator and state live on different bases")]
    BasisMismatch,
    #[error("no eigenvalue relation for {0}")]
    NoEigenRelation(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Hl(#[from] HlError),
}
