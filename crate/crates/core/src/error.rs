use thiserror::Error;

/// Errors surfaced by exact computations in this crate.
///
/// Everything here is a hard precondition or consistency failure; there are
/// no recoverable "try again" variants. Callers that hit `SizeExceeded` must
/// raise the budget explicitly rather than rely on silent truncation.
#[derive(Debug, Error)]
pub enum Error {
    /// Mismatched parameters between operands (modulus, rank, group key).
    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),

    /// Parameters that do not define a group or operation (e.g. p does not
    /// divide r, or an element fails the phase-sum membership test).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An enumeration would exceed the configured budget.
    #[error("size {required} exceeds budget {budget}")]
    SizeExceeded { required: u128, budget: u64 },

    /// A candidate map fails a homomorphism or bijectivity audit, or the
    /// defining parameter conditions for an automorphism.
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),

    /// An exact value landed outside its proven range (a computation bug or
    /// a violated precondition, never a rounding artifact).
    #[error("consistency failure: {0}")]
    Consistency(String),

    /// A number outside the prime field was coerced to a rational.
    #[error("value is not rational: nonzero coefficient at degree {degree}")]
    NotRational { degree: usize },

    /// The operation is defined but its preconditions exclude this key.
    #[error("unsupported key: {0}")]
    UnsupportedKey(String),
}

pub type Result<T> = std::result::Result<T, Error>;
