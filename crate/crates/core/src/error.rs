use thiserror::Error;

/// Errors raised by the building operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: u8, got: u8 },
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("unsupported configuration: m={m}, dim={dim}")]
    Unsupported { m: usize, dim: u8 },
    #[error("partially infinite ideal requires dim 2, got dim {0}")]
    PartialInfiniteDim(u8),
    #[error("every component is the full field; not a lattice class")]
    AllFull,
    #[error("{0} is not a vertex class")]
    NotVertex(String),
    #[error("{0} is not an inner vertex")]
    NotInner(String),
    #[error("operation requires dim {required}, got {got}")]
    WrongDim { required: u8, got: u8 },
    #[error("ray direction is constant modulo the diagonal")]
    ConstantDirection,
    #[error("invalid ray: {0}")]
    InvalidRay(String),
    #[error("segment matches no maximal chain type")]
    Unclassified,
    #[error("chain type {0} does not fit this segment")]
    TypeMismatch(String),
    #[error("modules are not nested")]
    NotNested,
    #[error("window bound must be at least 1, got {0}")]
    BadBound(i64),
    #[error("vertex {0} is out of range")]
    NoSuchVertex(usize),
    #[error("star of vertex {0} is not contained in the window")]
    TruncatedStar(usize),
    #[error("invalid permutation {0:?}")]
    BadPermutation(Vec<usize>),
    #[error("element is not an involution")]
    NotInvolution,
    #[error("{0} is not a prime in 2..=13")]
    BadModulus(u64),
    #[error("basis is singular modulo {0}")]
    SingularBasis(u64),
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("{0}")]
    Semantic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
