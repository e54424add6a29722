use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),
    #[error("generators {0:?} are not cofinite (gcd {1} != 1)")]
    NotCofinite(Vec<u64>, u64),
    #[error("set is not a numerical semigroup: {0}")]
    NotASemigroup(String),
    #[error("set is not a relative ideal of the semigroup: {0}")]
    NotAnIdeal(String),
    #[error("ideals live over different semigroups")]
    MismatchedSemigroups,
    #[error("ideal {0} is not contained in the semigroup")]
    NotIntegral(String),
    #[error("ideal {0} is not reflexive")]
    NotReflexive(String),
    #[error("genus bound {requested} exceeds the configured maximum {limit}")]
    GenusBoundExceeded { requested: usize, limit: usize },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
