use thiserror::Error;

use crate::exact_poly::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree (gcd with its derivative is nonconstant)")]
    NotSquarefree,
    #[error("interval endpoint {0} is a root of the polynomial")]
    EndpointIsRoot(ExactRational),
    #[error("interval lower bound must be strictly less than upper bound")]
    EmptyInterval,
    #[error("isolation width must be positive")]
    NonPositiveWidth,
    #[error("polynomial is not in the span of x^i (1+x)^(n-2i) for n = {n}")]
    NotInBasisSpan { n: usize },
    #[error("polynomial degree {degree} exceeds the ambient rank {n}")]
    DegreeTooLarge { degree: usize, n: usize },
    #[error("xi vector for rank {n} must have {expected} entries, got {got}")]
    XiLength {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("transfer check requires xi_0 = 0")]
    UnsupportedXiZero,
    #[error("transfer check requires a nonzero xi vector")]
    ZeroInput,
    #[error("invalid rank or parameter: {0}")]
    InvalidRank(String),
    #[error("xi entry {index} of {system} is not an integer: {value}")]
    NonIntegralXi {
        system: String,
        index: usize,
        value: ExactRational,
    },
    #[error("order must be nonnegative, got {0}")]
    NegativeOrder(i64),
    #[error("root index k = {k} out of range 1..={max} for n = {n}")]
    IndexOutOfRange { n: usize, k: usize, max: usize },
    #[error("precision must be at least 64 bits, got {0}")]
    PrecisionTooLow(usize),
    #[error("oracle value could not be separated from isolating interval endpoints at {0} bits")]
    PrecisionExhausted(usize),
    #[error("depth must be at least 1")]
    InvalidDepth,
    #[error("unknown multiplier sequence: {0}")]
    UnknownSequence(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
