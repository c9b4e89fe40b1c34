use thiserror::Error;

/// Errors raised by sequence, sum and generating-function operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} is out of domain (must be >= {min})")]
    IndexOutOfDomain { index: i64, min: i64 },

    #[error("discriminant is zero: the characteristic roots coincide")]
    RepeatedRoot,

    #[error("denominator has zero constant term: no power series expansion at z = 0")]
    NoExpansion,

    #[error("denominator polynomial is zero")]
    ZeroDenominator,

    #[error("1 - p - q = 0: the three-term split is singular, use the degenerate split")]
    SingularSplit,

    #[error("1 - p - q != 0: use the generic three-term split")]
    UseGenericSplit,

    #[error("linear system is singular")]
    SingularSystem,

    #[error("intermediate value needs {bits} bits, above the limit of {limit}")]
    BitLimitExceeded { bits: u64, limit: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
