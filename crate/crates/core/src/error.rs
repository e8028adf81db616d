use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidCartanType(String),
    #[error("operation needs root data, which type {0} does not carry")]
    UnsupportedType(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("dimension {dim} exceeds the configured cap {cap}")]
    CapExceeded { dim: String, cap: u64 },
    #[error("polynomial division leaves a nonzero remainder")]
    NonExactDivision,
    #[error("distribution has a negative coefficient at q^{0}")]
    NegativeCoefficient(usize),
    #[error("partition has {rows} nonzero rows but only {n} letters are available")]
    TooManyRows { rows: usize, n: usize },
    #[error("coordinates {0} and {1} coincide")]
    RepeatedCoordinate(usize, usize),
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },
    #[error("point is not a coweight of the dilated alcove")]
    NotInAlcove,
    #[error("node {node} of {cartan_type} is not minuscule")]
    NotMinuscule { cartan_type: String, node: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
