use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a fan needs at least 3 rays, got {0}")]
    TooFewRays(usize),

    #[error("a fan may have at most {max} rays, got {count}")]
    TooManyRays { count: usize, max: usize },

    #[error("ray {index} is not primitive")]
    NonPrimitiveRay { index: usize },

    #[error("ray {index} has a coordinate outside ±{max}")]
    RayOutOfRange { index: usize, max: i64 },

    #[error("det(l_{index}, l_{next}) = {det}, expected +1", next = .index + 1)]
    BadConsecutiveDeterminant { index: usize, det: i64 },

    #[error("rays wind {turns} times around the origin, expected once")]
    BadWinding { turns: usize },

    #[error("unknown surface name `{0}`")]
    UnknownName(String),

    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },

    #[error("coefficient {value} is outside ±{max}")]
    CoefficientOutOfRange { value: i64, max: i64 },

    #[error("divisors live on different fans")]
    MixedFans,

    #[error("operation is only defined on the king-counterexample surface")]
    WrongSurface,

    #[error("class {0:?} occurs more than once in the sequence")]
    DuplicateClass(Vec<i64>),

    #[error("affine input must have {expected} coordinates, got {got}")]
    NotAffineInput { expected: usize, got: usize },

    #[error(
        "classification mismatch: {} classes found only by the scan, {} only in the table",
        engine_only.len(),
        table_only.len()
    )]
    MismatchFound {
        engine_only: Vec<Vec<i64>>,
        table_only: Vec<Vec<i64>>,
    },

    #[error("certificate claim {id} failed: {witness}")]
    ClaimFailed { id: u8, witness: String },
}
