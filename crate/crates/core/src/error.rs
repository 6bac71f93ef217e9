use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("labeling has {got} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not cubic")]
    NotCubic,
    #[error("labeling is not a valid SDRDF")]
    InvalidLabeling,
    #[error("instance has {n} vertices, above the limit of {limit} for this method")]
    TooLarge { n: usize, limit: usize },
    #[error("unsupported graph for strip dynamic programming: {0}")]
    UnsupportedTopology(String),
    #[error("set is not an alpha-total dominating set")]
    NotAlphaTotalDominating,
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
