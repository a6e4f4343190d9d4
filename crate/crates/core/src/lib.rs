//! Numerical semigroups with an emphasis on sparse semigroups.
//!
//! A numerical semigroup `H ⊆ ℕ` is closed under addition, contains 0 and
//! misses only finitely many integers, its *gaps* `λ₁ < … < λ_g`. It is
//! *sparse* when consecutive gaps differ by at most 2. This crate provides
//!
//! * the [`NumericalSemigroup`] value type, built from gaps or generators;
//! * the constructive families and the doubling/halving transforms
//!   ([`family`]);
//! * the leap decomposition and the usual predicates ([`analytics`]);
//! * classifiers for sparse semigroups with small `κ = 2g − λ_g` and for
//!   limit sparse semigroups ([`classify`]);
//! * exhaustive genus-tree enumeration ([`enumerate`]) and a harness that
//!   checks the structural results against it ([`verify`]).
//!
//! ```
//! use sparsegroup::{analytics, NumericalSemigroup};
//!
//! let h = NumericalSemigroup::from_generators(&[3, 5, 7]).unwrap();
//! assert_eq!(h.gaps(), &[1, 2, 4]);
//! let leaps = analytics::leap_profile(&h).unwrap();
//! assert_eq!((leaps.single, leaps.double, leaps.kappa), (1, 1, 2));
//! ```

pub mod analytics;
pub mod classify;
pub mod enumerate;
mod error;
pub mod family;
pub mod record;
mod semigroup;
pub mod verify;

pub use analytics::{LeapProfile, SymmetryClass};
pub use classify::{ClassificationTag, Theorem};
pub use enumerate::{Enumerator, Filter};
pub use error::{Error, Result};
pub use family::FamilySpec;
pub use record::OutputRecord;
pub use semigroup::NumericalSemigroup;
pub use verify::VerificationReport;
