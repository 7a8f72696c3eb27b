use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("degenerate norm: dual functionals do not span a {dim}-dimensional space")]
    DegenerateNorm { dim: usize },

    #[error("support face of the zero vector is undefined")]
    ZeroVector,

    #[error("epsilon out of range")]
    EpsilonOutOfRange,

    #[error("{what} exceeds the size cap of {limit}")]
    SizeCap { what: &'static str, limit: usize },

    #[error("subspace basis is linearly dependent")]
    LinearlyDependent,

    #[error("operation requires a proper subspace (dim {dim} equals ambient dimension)")]
    ImproperSubspace { dim: usize },

    #[error("space is not an l-infinity sum")]
    NotASum,

    #[error("capacity exceeded: explored {explored} of at most {limit} pattern solves without a decision")]
    Capacity { explored: u64, limit: u64 },
}
