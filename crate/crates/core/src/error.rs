use thiserror::Error;

use crate::hform::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular (determinant is zero)")]
    SingularMatrix,

    #[error("invalid H-form: {0}")]
    InvalidForm(Violation),

    #[error("illegal generator: {0}")]
    IllegalGenerator(String),

    #[error("matrix does not preserve the H-form")]
    NotOrthogonal,

    #[error("dimension {dim} exceeds the limit {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("dimension {dim} is below the required {min}")]
    DimensionTooSmall { dim: usize, min: usize },

    #[error("S-letter support leaves only {free} free basis vectors, need 3")]
    NoSupportRoom { free: usize },

    #[error("mapping class has no rational homology action")]
    MissingRationalAction,

    #[error("{triples} triple points is impossible when c = {c}")]
    ParityViolation { triples: u64, c: u8 },

    #[error("out of range: {0}")]
    Guard(String),

    #[error("malformed symbol function: {0}")]
    MalformedFunction(String),

    #[error("malformed input: {0}")]
    Malformed(String),
}
