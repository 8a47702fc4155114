use exact_core::CoreError;
use partition_space::PartitionError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("occupancy cap {0} is too small, need at least {1}")]
    CapTooSmall(usize, usize),
    #[error("a chain needs at least one site")]
    NoSites,
    #[error("label state {0:?} does not describe a partition")]
    NotAPartition(Vec<i64>),
    #[error("unexpected power z^{0} in a one-sided expansion")]
    WrongGrading(i64),
    #[error("state {0:?} is outside the basis")]
    OutsideBasis(Vec<usize>),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}
