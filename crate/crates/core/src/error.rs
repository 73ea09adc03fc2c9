use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}, so the semigroup has no Frobenius number")]
    NonCoprimeGenerators(i64),
    #[error("{0} is not a nonzero element of the semigroup")]
    AperyOfNonMember(i64),
    #[error("the semigroup is N; its canonical ideal is N itself")]
    FullSemigroup,
    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("exponent {0} is not in the value semigroup of the branch")]
    NotInBranch(i64),
    #[error("invalid branch map: {0}")]
    InvalidMap(String),
    #[error("ideal lives on a different branch than the map's codomain")]
    BranchMismatch,
    #[error("specification is not constructible: {0}")]
    InvalidSpec(String),
    #[error("simultaneous cancellation in both coordinates below the window at {0:?}")]
    DoubleTieUnresolved(Vec<[i64; 2]>),
    #[error("plot window is empty")]
    EmptyWindow,
    #[error("truncation {truncation} too small: needs more than {required}")]
    TruncationTooSmall { truncation: usize, required: usize },
    #[error("{needed} free coefficient positions exceed the exhaustive budget {budget}")]
    BudgetExhausted { needed: usize, budget: usize },
    #[error("{0} is not a supported prime")]
    BadPrime(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
