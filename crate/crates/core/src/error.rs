use thiserror::Error;

/// Errors raised by graph construction, ingestion and the oracle guards.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("influence is undefined for a subgraph with an empty layer")]
    UndefinedInfluence,

    #[error("vertex {0} is not active in this view")]
    InactiveVertex(u32),

    #[error("instance has {vertices} vertices, the brute-force limit is {limit}")]
    TooLarge { vertices: usize, limit: usize },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
