use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid dimension vector: {0}")]
    InvalidDims(String),

    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("matrix is not Hermitian (max |M - M^dagger| = {0:e})")]
    NotHermitian(f64),

    /// A density-matrix or pure-vector invariant does not hold.
    #[error("{invariant} invariant violated: {detail}")]
    InvalidState {
        invariant: &'static str,
        detail: String,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("criterion applies to bipartite states only (got {0} subsystems)")]
    BipartiteOnly(usize),

    #[error("n-copy dimension {dim} exceeds guard {guard}")]
    DimensionGuard { dim: usize, guard: usize },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
