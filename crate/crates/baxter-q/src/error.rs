use exact_core::CoreError;
use lattice_models::LatticeError;
use partition_space::PartitionError;
use thiserror::Error;
use vertex_operators::VertexError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaxterError {
    #[error("null vector needs a >= b >= c, got ({a}, {b}, {c})")]
    Ordering { a: i64, b: i64, c: i64 },
    #[error("t must be nonzero")]
    ZeroT,
    #[error("label state {0:?} has no occupation vector in the sector")]
    OutsideSector(Vec<i64>),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Vertex(#[from] VertexError),
}
