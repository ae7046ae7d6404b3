use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Input outside a table's precomputed range.
    #[error("range error: {0}")]
    Range(String),

    /// A claimed decomposition failed the exact identity check.
    #[error("verification failed: 4/{n} != 1/{n1} + 1/{n2} + 1/{n3}")]
    BadDecomposition { n: u64, n1: u64, n2: u64, n3: u64 },

    /// Unknown family identifier.
    #[error("no such family: {0}")]
    UnknownFamily(String),

    /// Malformed input from the command line or a data file.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
