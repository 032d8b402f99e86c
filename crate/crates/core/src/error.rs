use thiserror::Error;

/// Errors raised by the algebra, group and density routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-unit leading coefficient in `{0}`")]
    NonUnitLeadingCoefficient(String),
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial is constant in `{0}`")]
    ConstantInVariable(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("bad prime {0}: it divides the leading coefficient")]
    BadPrime(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is outside the supported range")]
    ModulusTooLarge(u64),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("group of order {order} exceeds the bound {bound}; extended mode required")]
    OrderBound { order: String, bound: u64 },
    #[error("ambient group of order {0} is too large for enumeration; use verify mode")]
    AmbientTooLarge(String),
    #[error("degree {0} exceeds the iteration guard")]
    DegreeOverflow(usize),
    #[error("exact division left a nonzero remainder: {0}")]
    InexactDivision(String),
    #[error("indeterminate point: {0}")]
    IndeterminatePoint(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("check `{0}` failed: {1}")]
    CheckFailed(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;
