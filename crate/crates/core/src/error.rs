use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("malformed rational scalar {0:?}, expected \"p/q\" or \"p\"")]
    BadScalar(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index ({row}, {col}) out of bounds")]
    IndexOutOfBounds { row: usize, col: usize },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("vectors are linearly dependent")]
    DependentVectors,
    #[error("malformed algebra data: {0}")]
    Malformed(String),
    #[error("unknown builtin triple {0:?} (known: field, dual-k, dual-dual, trunc-x4, mat2-k)")]
    UnknownBuiltin(String),
    #[error("{0} requires a commutative triple, but A is not commutative")]
    NotCommutative(&'static str),
    #[error("face index {face} out of range 0..={max} at level {level}")]
    FaceOutOfRange { level: usize, face: usize, max: usize },
    #[error("cochain space at level {level} exceeds the cap of {cap} basis elements")]
    TooLarge { level: usize, cap: usize },
    #[error("boundary at level {level} does not preserve the cyclic subcomplex")]
    SubcomplexViolation { level: usize },
    #[error("universal factorization failed: {0}")]
    NotUniversal(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
