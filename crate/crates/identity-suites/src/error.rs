use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SuiteError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}
