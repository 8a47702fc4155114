use thiserror::Error;

#[derive(Debug, Error)]
pub enum BetheError {
    #[error("pole: 1 + u s vanishes")]
    Pole,
    #[error("coincident parameters at positions {0} and {1}")]
    Coincident(usize, usize),
    #[error("{exponents} exponents for {variables} parameters")]
    LengthMismatch { exponents: usize, variables: usize },
    #[error("outside desk scale: {0}")]
    TooLarge(String),
    #[error("divergent parameters: {0}")]
    Divergent(String),
    #[error("singular evaluation point: {0}")]
    Singular(String),
    #[error(transparent)]
    Core(#[from] exact_core::CoreError),
    #[error(transparent)]
    Lattice(#[from] lattice_models::LatticeError),
}
