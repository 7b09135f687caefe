use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not invertible (rank {rank} < {size})")]
    NotInvertible { rank: usize, size: usize },
    #[error("operation table is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("right translation by {0} is not bijective (collision at {1})")]
    NoRightInverses(usize, usize),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("the tables do not form an extended associative semigroup: {0}")]
    NotEas(String),
    #[error("size limit exceeded: {0}")]
    SizeLimitExceeded(String),
    #[error("constant term of the inner series must vanish")]
    NonzeroConstantTerm,
    #[error("position {pos} out of range for arity {arity}")]
    PositionOutOfRange { pos: usize, arity: usize },
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("operad is not recognizable as an As_Phi: {0}")]
    NotRecognizable(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownName(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
