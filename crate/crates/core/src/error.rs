use thiserror::Error;

/// Errors raised by the combinatorial kernels.
///
/// `Internal` is special: it signals that an identity the library relies on
/// (a nonnegative Kronecker coefficient, an exact polynomial quotient, an
/// integral character sum) did not hold, which means a bug rather than bad
/// input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid rectangle {rows}x{cols}: both sides must be positive")]
    InvalidRectangle { rows: usize, cols: usize },
    #[error("partition exceeds rectangle")]
    ExceedsRectangle,
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("empty window")]
    EmptyWindow,
    #[error("coefficient overflow")]
    Overflow,
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
