use thiserror::Error;

/// Anything that stops a command before a verdict; all map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("config line {line}: expected `key = value`, found `{text}`")]
    ConfigLine { line: usize, text: String },
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Suite(#[from] identity_suites::SuiteError),
    #[error(transparent)]
    Core(#[from] exact_core::CoreError),
    #[error(transparent)]
    Partition(#[from] partition_space::PartitionError),
    #[error(transparent)]
    HallLittlewood(#[from] hall_littlewood::HlError),
    #[error(transparent)]
    Lattice(#[from] lattice_models::LatticeError),
    #[error(transparent)]
    Baxter(#[from] baxter_q::BaxterError),
    #[error(transparent)]
    Vertex(#[from] vertex_operators::VertexError),
    #[error(transparent)]
    Bethe(#[from] bethe_gaudin::BetheError),
}
