use thiserror::Error;

/// Errors produced by the toolkit.
///
/// Validation-style variants (bad input) are distinguished from the
/// `Internal` variant, which signals a violated arithmetic invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inadmissible root system {family}{rank}: {constraint}")]
    InadmissibleSystem {
        family: char,
        rank: usize,
        constraint: String,
    },

    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("simple reflection index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("{what} exceeds guard: requested {requested}, limit {limit}")]
    GuardExceeded {
        what: &'static str,
        requested: String,
        limit: String,
    },

    #[error("weight {0} is singular after the rho-shift; use the acyclicity path instead")]
    Singular(String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {0} lies on no simple-coroot wall")]
    NotOnWall(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("internal arithmetic error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
