use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected n = {expected}, found n = {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("no leading term of zero")]
    ZeroElement,

    #[error("monomial does not divide the target")]
    NotDivisible,

    #[error("element is already reduced")]
    AlreadyReduced,

    #[error("polynomial is not numerical: {0}")]
    NotNumerical(String),

    #[error("zero relation at position {0}")]
    ZeroRelation(usize),

    #[error("generator index e{index} out of range (m = {m})")]
    GeneratorOutOfRange { index: usize, m: usize },

    #[error("point {point:?} does not have length {dim}")]
    PointLength { point: Vec<u32>, dim: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
