use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {left} vs {right}")]
    AmbientMismatch { left: String, right: String },
    #[error("monomial length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,
    #[error("modulus {0} is not a prime in [2, 2^31)")]
    NotPrime(u64),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("groebner step budget of {budget} reductions exhausted")]
    StepBudgetExceeded { budget: u64 },
    #[error("zero ring: the relations generate the unit ideal")]
    ZeroRing,
    #[error("zero quotient: {0} is not a proper ideal")]
    ImproperIdeal(String),
    #[error("graded-only: {0} is not a homogeneous presentation")]
    GradedOnly(String),
    #[error("nzd-search-exhausted: no nonzerodivisor found after {retries} random draws")]
    NzdSearchExhausted { retries: u32 },
    #[error("sequence of length {len} exceeds the permutation bound {bound}")]
    PermutationBound { len: usize, bound: usize },
    #[error("ideal does not belong to the {0} factor of this tensor product")]
    SideMismatch(&'static str),
    #[error("algebra is not a tensor product presentation")]
    NotATensor,
    #[error("ideal belongs to a different algebra")]
    OwnerMismatch,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
