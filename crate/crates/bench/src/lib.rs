//! Shared inputs for the criterion benchmarks.

use sparsegroup::NumericalSemigroup;

/// Generator sets of increasing difficulty for the membership sieve.
pub const GENERATOR_SETS: &[&[u32]] = &[&[2, 7], &[3, 4, 5], &[11, 13, 17], &[20, 21], &[31, 37, 41, 43]];

/// A mix of sparse and non-sparse semigroups for the analytics benches.
pub fn sample_semigroups() -> Vec<NumericalSemigroup> {
    GENERATOR_SETS
        .iter()
        .map(|g| NumericalSemigroup::from_generators(g).expect("coprime generators"))
        .collect()
}
