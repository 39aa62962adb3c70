use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("content {0:?} is not a partition")]
    ContentNotPartition(Vec<usize>),

    #[error("index {index} out of range (must be < {bound})")]
    OutOfRange { index: usize, bound: usize },

    #[error("ring dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid permutation images {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("scale factor must be nonzero")]
    ZeroScale,

    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,

    #[error("symmetric group degree {0} is outside the supported range 0..=8")]
    UnsupportedDegree(usize),

    #[error("class function does not decompose: multiplicity {value} of {partition}")]
    InvalidMultiplicity { partition: String, value: String },

    #[error("expected {expected} evaluation parameters (one per column), found {found}")]
    ParamLength { expected: usize, found: usize },

    #[error("evaluation parameters must be pairwise distinct")]
    RepeatedParameters,

    #[error("evaluation parameters must be nonzero")]
    ZeroParameter,

    #[error("algebra is not graded (nonzero evaluation parameters)")]
    NotGraded,

    #[error("partition of {d} is outside the stable range n = {n}")]
    StableRange { d: usize, n: usize },

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("theorem violation: {0}")]
    Violation(String),
}
