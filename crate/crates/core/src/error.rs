use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the library. Verification failures are not errors; they
/// come back as a [`crate::Verification`] whose `holds()` is false.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("discriminant {0} is not congruent to 0 or 1 mod 4")]
    BadDiscriminant(BigInt),

    #[error("matrix is not in SL2(Z): {0}")]
    NotUnimodular(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("unsupported domain: {0}")]
    Unsupported(String),

    #[error("discriminants differ: {0} and {1}")]
    DiscriminantMismatch(BigInt, BigInt),

    #[error("form {0} is not primitive")]
    NotPrimitive(String),

    #[error("not composable: {0}")]
    NotComposable(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("division by zero")]
    DivisionByZero,
}

pub type Result<T> = std::result::Result<T, Error>;
