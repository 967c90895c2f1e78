use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division is not exact")]
    NotDivisible,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("the zero polynomial has no breadth")]
    EmptyPolynomial,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid torus parameters (p, q) = ({p}, {q}): need p, q >= 2 and gcd(p, q) = 1")]
    InvalidTorusParameters { p: i64, q: i64 },

    #[error("invalid braid: {0}")]
    InvalidBraid(String),

    #[error("braid closure has {components} components, expected a knot")]
    NotAKnot { components: usize },

    #[error("not an Alexander polynomial: {0}")]
    NotAlexanderLike(String),

    #[error("{p} has no inverse modulo {q}")]
    NoInverse { p: i64, q: i64 },

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("coefficient {0} does not fit in 64 bits")]
    CoefficientOverflow(String),

    #[error("invalid scan: {0}")]
    InvalidScan(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}
