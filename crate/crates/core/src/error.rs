use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomials live over different variable universes")]
    UniverseMismatch,
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("polynomial is not homogeneous of degree {0}")]
    NotHomogeneous(u32),
    #[error("degenerate degree: {0}")]
    DegenerateDegree(String),
    #[error("coefficient matrix is rank deficient")]
    RankDeficient,
    #[error("eigenvector matrix is singular")]
    SingularV,
    #[error("no sampling strategy applies to this polynomial")]
    NoStrategy,
    #[error("gave up after {0} random draws")]
    RetryExhausted(u32),
    #[error("unsupported partition {0}")]
    UnsupportedPartition(String),
    #[error("restriction to the line vanishes identically")]
    IdenticallyZero,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("result is not an integer: {0}")]
    NonIntegral(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("internal cross-check failed: {0}")]
    Inconsistent(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
