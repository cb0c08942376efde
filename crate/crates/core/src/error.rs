use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero form has no content")]
    ZeroForm,
    #[error("form is not positive definite")]
    NotPositiveDefinite,
    #[error("invalid discriminant {0}: must be negative and congruent to 0 or 1 mod 4")]
    InvalidDiscriminant(String),
    #[error("discriminant {0} is too large to enumerate")]
    DiscriminantTooLarge(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(String),
    #[error("{0} is not a quadratic residue mod {1}")]
    NotQuadraticResidue(String, String),
    #[error("unknown generator letter {0:?}")]
    UnknownLetter(char),
    #[error("Q*(√−n) action uses PSL(2,ℤ) only")]
    ImproperAction,
    #[error("n must be positive, got {0}")]
    NonPositiveN(String),
    #[error("elements belong to different sets: n={0} and n={1}")]
    MismatchedN(String, String),
    #[error("orbit depth {depth} exceeds the configured maximum {max}")]
    DepthExceeded { depth: usize, max: usize },
    #[error("modulus {0} is too large for an exhaustive residue table")]
    ModulusTooLarge(String),
    #[error("invalid {kind} {text:?}: {reason}")]
    Parse {
        kind: &'static str,
        text: String,
        reason: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_error(kind: &'static str, text: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        kind,
        text: text.to_string(),
        reason: reason.into(),
    }
}
