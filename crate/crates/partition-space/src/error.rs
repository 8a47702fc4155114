use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<i64>),
    #[error("negative part in {0:?}")]
    NegativePart(Vec<i64>),
    #[error("cannot parse {kind} from {text:?}")]
    Parse { kind: &'static str, text: String },
    #[error("unbounded constraint: {0}")]
    Unbounded(&'static str),
    #[error("inconsistent Toda labels {0:?}")]
    BadLabels(Vec<i64>),
}
