use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("permutation oracle limited to order {max}, got {n}")]
    OracleSize { n: usize, max: usize },
    #[error("index out of range: {0}")]
    Rank(String),
    #[error("expected corank {expected}, matrix has corank {actual}")]
    CorankMismatch { expected: usize, actual: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("group membership precondition failed: {0}")]
    Membership(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
