use thiserror::Error;

/// Errors produced by semigroup construction, analysis and enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The complement of the proposed gap set is not closed under addition.
    #[error("NotASemigroup: {gap} is listed as a gap but {a} + {b} = {gap} with {a}, {b} members")]
    NotASemigroup { gap: u32, a: u32, b: u32 },

    /// The generators share a common factor, so infinitely many integers are missing.
    #[error("InfiniteGenus: generators have gcd {gcd}")]
    InfiniteGenus { gcd: u32 },

    /// Malformed input that is not a parse error (ordering, zeros, empty lists).
    #[error("InvalidInput: {0}")]
    InvalidInput(String),

    #[error("InvalidFamilyParams: {0}")]
    InvalidFamilyParams(String),

    /// The quantity only exists for semigroups of positive genus.
    #[error("NotDefined: {0} is undefined for the semigroup of genus 0")]
    NotDefined(&'static str),

    /// The operation's hypotheses are not met by the input.
    #[error("NotApplicable: {0}")]
    NotApplicable(String),

    #[error("ResourceLimit: genus {requested} exceeds the configured cap {cap}")]
    ResourceLimit { requested: u32, cap: u32 },

    #[error("UnknownTheorem: {0}")]
    UnknownTheorem(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
