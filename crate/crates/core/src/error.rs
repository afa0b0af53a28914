use thiserror::Error;

use crate::algebra::AlgebraKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("cannot divide by the zero element of the algebra")]
    DivisionByZeroElement,
    #[error("matrix product left the Hermitian traceless subspace: {0}")]
    RepresentationViolation(String),
    #[error("matrix is not in the span of the basis: {0}")]
    BasisDecompositionFailure(String),
    #[error("join of a point with itself is undefined")]
    EqualPoints,
    #[error("meet of a line with itself is undefined")]
    EqualLines,
    #[error("vector does not satisfy the Veronese conditions")]
    NotVeronese,
    #[error("operation needs affine points, got an element at infinity")]
    InfiniteElement,
    #[error("plane kind mismatch: expected {expected}, got {got}")]
    KindMismatch {
        expected: AlgebraKind,
        got: AlgebraKind,
    },
    #[error("could not draw a non-degenerate configuration after {0} retries")]
    DegenerateAfterRetries(usize),
    #[error("degenerate configuration: {0}")]
    DegenerateConfig(String),
    #[error("cannot parse scalar {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
