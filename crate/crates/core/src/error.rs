use thiserror::Error;

/// Errors produced by chain and geometry operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("a point needs at least one coordinate")]
    EmptyPoint,

    #[error("non-finite coordinate {value} at index {index}")]
    NonFiniteCoordinate { index: usize, value: f64 },

    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(&'static str),

    #[error("side lengths {a}, {b}, {c} violate the triangle inequality")]
    TriangleInequality { a: f64, b: f64, c: f64 },

    #[error("side lengths must be nonnegative, got {0}")]
    NegativeSideLength(f64),

    #[error("a degree must be a nonnegative number, got {0}")]
    InvalidDegree(f64),

    #[error("plane basis vectors must be orthonormal")]
    NotOrthonormal,

    #[error("scale factor must be positive and finite, got {0}")]
    InvalidScale(f64),

    #[error("moving-average window must be odd, got {0}")]
    EvenWindow(usize),

    #[error("chain length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("need at least {required} values, got {actual}")]
    InsufficientData { required: usize, actual: usize },

    #[error("zero variance makes the correlation undefined")]
    ZeroVariance,

    #[error("minimal-ball search supports dimensions 2 and 3, got {0}")]
    UnsupportedDimension(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
