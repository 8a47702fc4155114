//! Partitions, occupation vectors and enumerated truncated state spaces.

mod basis;
mod error;
mod occupation;
mod partition;
mod toda;

pub use basis::{Basis, Constraint, DecreasingWindow, PartitionConstraint};
pub use error::PartitionError;
pub use occupation::Occupation;
pub use partition::{partitions_of, strip_test, strips_above, strips_below, Partition, StripKind};
pub use toda::{labels_from_occupations, occupations_from_labels, toda_norm};
