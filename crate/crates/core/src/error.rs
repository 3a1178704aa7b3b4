use thiserror::Error;

/// Errors raised by field, polynomial and theorem-checking operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported cap 2^31 - 1")]
    ModulusTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("field has characteristic zero; no p-th root to take")]
    NotCharP,
    #[error("derivative is nonzero; polynomial is not a p-th power composition")]
    DerivativeNonzero,
    #[error("wronskian is zero")]
    ZeroWronskian,
    #[error("inputs do not sum to zero")]
    NotZeroSum,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal divisibility check failed: {0}")]
    DivisibilityFailure(String),
    #[error("operation requires characteristic zero")]
    WrongCharacteristic,
    #[error("f^3 equals g^2")]
    CubeEqualsSquare,
    #[error("a^m and b^n are not associated")]
    NotAssociated,
    #[error("exponents m, n are not coprime")]
    ExponentsNotCoprime,
    #[error("enumeration requires a finite prime field")]
    NotFiniteField,
    #[error("invalid search configuration: {0}")]
    BadConfig(String),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::PreconditionViolated(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
