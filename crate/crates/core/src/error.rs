use thiserror::Error;

/// Errors raised by graph construction, group computations and solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("size guard: {what} has {size} vertices, cap is {cap}")]
    SizeGuard { what: String, size: u128, cap: u128 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: String, got: String },
    #[error("vertices {0} and {1} are not connected")]
    Unreachable(u64, u64),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(u64),
    #[error("vertex {0} appears more than once")]
    DuplicateVertex(u64),
    #[error("no structured automorphism group for {0}")]
    NoStructuredForm(String),
    #[error("search budget exceeded after {0} nodes")]
    SearchBudgetExceeded(u64),
    #[error("graph is not 2-distinguishable")]
    NotTwoDistinguishable,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
