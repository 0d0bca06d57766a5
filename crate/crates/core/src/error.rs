use thiserror::Error;

use crate::hypothesis::Hypothesis;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("operands belong to different polynomial rings")]
    RingMismatch,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("syntax error at position {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("Groebner budget of {budget} reductions exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("{q} is not a power of the characteristic {p}")]
    NotFrobeniusPower { q: u64, p: u64 },
    #[error("input is not homogeneous for the ring grading")]
    NotHomogeneous,
    #[error("hypothesis `{0}` must be asserted")]
    MissingHypothesis(Hypothesis),
    #[error("divisor error: {0}")]
    Divisor(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
