//! Exhaustive verification of the structural results over a genus range.
//!
//! Each registered result names a hypothesis and a conclusion. The harness
//! enumerates every semigroup of genus `1..=g_max` meeting the hypothesis
//! (all of them are sparse, so the pruned sparse subtree suffices) and
//! records the gap list of every one whose conclusion fails.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analytics::{is_arf, kappa, leap_profile, tail_is_double_leaps};
use crate::classify::{catalog, check_genus_bounds, classify_limit_sparse, CatalogId};
use crate::enumerate::{Enumerator, Filter};
use crate::error::{Error, Result};
use crate::family::{construct, double_semigroup, halve_semigroup, reduce_to_limit, FamilySpec};
use crate::semigroup::NumericalSemigroup;

/// Outcome of checking one result over a genus range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    /// Inclusive.
    pub genus_range: (u32, u32),
    /// Semigroups that met the hypothesis.
    pub checked: u64,
    /// Gap lists of counterexamples.
    pub failures: Vec<Vec<u32>>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Equal up to timing.
    pub fn same_outcome(&self, other: &Self) -> bool {
        self.theorem_id == other.theorem_id
            && self.genus_range == other.genus_range
            && self.checked == other.checked
            && self.failures == other.failures
    }
}

#[derive(Debug, Clone, Copy)]
pub struct TheoremInfo {
    pub id: &'static str,
    pub statement: &'static str,
}

/// Registered result identifiers, in reporting order.
pub const THEOREMS: &[TheoremInfo] = &[
    TheoremInfo { id: "leapthm", statement: "sparse: D + S = g - 1, D = g - kappa, S = kappa - 1" },
    TheoremInfo { id: "final_double_leaps", statement: "sparse, g >= 2kappa - 1: leaps from index 2kappa - 2 on are double" },
    TheoremInfo { id: "reduction_lemma", statement: "sparse, g >= 2kappa - 1: H lies in a sparse semigroup of genus 2kappa - 1 and Frobenius number 3kappa - 2" },
    TheoremInfo { id: "sym_catalog", statement: "symmetric sparse: H = <2, 2g + 1>" },
    TheoremInfo { id: "quasi_sym_catalog", statement: "quasi-symmetric sparse: H = <3, 4, 5> or <3, 5, 7>" },
    TheoremInfo { id: "odd3_catalog", statement: "sparse with Frobenius 2g - 3: one of three cases" },
    TheoremInfo { id: "even4_catalog", statement: "sparse with Frobenius 2g - 4: one of six cases" },
    TheoremInfo { id: "odd5_catalog", statement: "sparse with Frobenius 2g - 5: one of ten cases" },
    TheoremInfo { id: "bij_sdh", statement: "limit sparse: #(H cap [1, Frobenius]) = S = D" },
    TheoremInfo { id: "four_is_gap", statement: "limit sparse, even Frobenius: 4 is a gap" },
    TheoremInfo { id: "three_is_nongap", statement: "limit sparse, Frobenius 6r - 2: 3 in H iff 6r - 5 not in H" },
    TheoremInfo { id: "limit_even", statement: "limit sparse, even Frobenius 2g - 2r: H = 3N + H_{6r-2}, and H is Arf" },
    TheoremInfo { id: "genus_bound_even", statement: "sparse, Frobenius 2g - 2r: g <= 4r - 1" },
    TheoremInfo { id: "odd_frob_even_mult", statement: "limit sparse, odd Frobenius, even multiplicity: every member below the Frobenius number is even" },
    TheoremInfo { id: "odd_frob_odd_mult", statement: "limit sparse, odd Frobenius, odd multiplicity: 3N + H_{6r+1} or the odd-generated family" },
    TheoremInfo { id: "non_arf", statement: "3N + H_{6r+1} is Arf; the odd-generated family (r > 1) is not: 2(4r-1) - (4r-3) = 4r + 1 is a gap" },
    TheoremInfo { id: "genus_bound_odd", statement: "sparse, Frobenius 2g - 2r - 1: g <= 4r + 1 or every member below the Frobenius number is even" },
    TheoremInfo { id: "doubled_tail", statement: "sparse, Frobenius 2g - 2r - 1, g > 4r + 1: H = 2H' u H_{2g-2r-1} with H' of genus r" },
    TheoremInfo { id: "limit_classification", statement: "every limit sparse semigroup belongs to one of the three limit families" },
];

pub fn theorem_ids() -> impl Iterator<Item = &'static str> {
    THEOREMS.iter().map(|t| t.id)
}

type Predicate = fn(&NumericalSemigroup) -> bool;

enum Check {
    /// Per-semigroup implication over the sparse (or limit sparse) subtree.
    Implication {
        scope: Filter,
        hypothesis: Predicate,
        conclusion: Predicate,
    },
    /// The semigroups meeting `κ = kappa` are exactly the catalog.
    Catalog { id: CatalogId, kappa: u32 },
}

fn frob(h: &NumericalSemigroup) -> u32 {
    h.frobenius().expect("verification runs at positive genus")
}

fn kap(h: &NumericalSemigroup) -> u32 {
    kappa(h).expect("verification runs at positive genus")
}

fn any(_: &NumericalSemigroup) -> bool {
    true
}

fn past_limit(h: &NumericalSemigroup) -> bool {
    h.genus() + 1 >= 2 * kap(h)
}

fn even_frobenius(h: &NumericalSemigroup) -> bool {
    frob(h) % 2 == 0
}

fn odd_frobenius(h: &NumericalSemigroup) -> bool {
    frob(h) % 2 == 1
}

fn small_members_even(h: &NumericalSemigroup) -> bool {
    h.small_members().all(|n| n % 2 == 0)
}

/// `3ℕ ∪ H_f`.
fn three_n_plus(f: u32) -> NumericalSemigroup {
    construct(&FamilySpec::Hyperordinary { multiplicity: 3, g: f }).unwrap()
}

fn odd_generated(r: u32) -> Option<NumericalSemigroup> {
    construct(&FamilySpec::OddGeneratedLimit { r }).ok()
}

fn doubling_round_trip(h: &NumericalSemigroup) -> bool {
    let r = kap(h) / 2;
    let inner = halve_semigroup(h);
    inner.genus() == r && double_semigroup(&inner, h.genus(), r).is_ok_and(|d| d == *h)
}

fn check_for(id: &str) -> Result<Check> {
    use Filter::{LimitSparse, Sparse};
    let implication = |scope, hypothesis, conclusion| Check::Implication {
        scope,
        hypothesis,
        conclusion,
    };
    Ok(match id {
        "leapthm" => implication(Sparse, any, |h| {
            let p = leap_profile(h).unwrap();
            let g = h.genus();
            p.single + p.double + 1 == g
                && p.double + p.kappa == g
                && p.single + 1 == p.kappa
        }),
        "final_double_leaps" => implication(Sparse, past_limit, |h| {
            tail_is_double_leaps(h).unwrap_or(false)
        }),
        "reduction_lemma" => implication(Sparse, past_limit, |h| {
            let k = kap(h);
            reduce_to_limit(h).is_ok_and(|t| {
                t.genus() + 1 == 2 * k
                    && t.frobenius() == Some(3 * k - 2)
                    && crate::analytics::is_sparse(&t).unwrap_or(false)
                    && t.gaps().iter().all(|g| h.gaps().binary_search(g).is_ok())
            })
        }),
        "sym_catalog" => Check::Catalog { id: CatalogId::Sym, kappa: 1 },
        "quasi_sym_catalog" => Check::Catalog { id: CatalogId::QuasiSym, kappa: 2 },
        "odd3_catalog" => Check::Catalog { id: CatalogId::Odd3, kappa: 3 },
        "even4_catalog" => Check::Catalog { id: CatalogId::Even4, kappa: 4 },
        "odd5_catalog" => Check::Catalog { id: CatalogId::Odd5, kappa: 5 },
        "bij_sdh" => implication(LimitSparse, any, |h| {
            let p = leap_profile(h).unwrap();
            let below = h.small_members().filter(|&n| n <= frob(h)).count() as u32;
            below == p.single && below == p.double
        }),
        "four_is_gap" => implication(LimitSparse, even_frobenius, |h| !h.contains(4)),
        "three_is_nongap" => implication(LimitSparse, even_frobenius, |h| {
            let r = kap(h) / 2;
            h.contains(3) == !h.contains(6 * r as i64 - 5)
        }),
        "limit_even" => implication(LimitSparse, even_frobenius, |h| {
            let r = kap(h) / 2;
            *h == three_n_plus(6 * r - 2) && is_arf(h)
        }),
        "genus_bound_even" => implication(Sparse, even_frobenius, |h| {
            check_genus_bounds(h).unwrap_or(false)
        }),
        "odd_frob_even_mult" => implication(
            LimitSparse,
            |h| odd_frobenius(h) && h.multiplicity() % 2 == 0,
            |h| {
                small_members_even(h)
                    && h.even_gap_count() == kap(h) / 2
                    && doubling_round_trip(h)
            },
        ),
        "odd_frob_odd_mult" => implication(
            LimitSparse,
            |h| odd_frobenius(h) && h.multiplicity() % 2 == 1,
            |h| {
                let r = kap(h) / 2;
                *h == three_n_plus(6 * r + 1) || (r > 1 && odd_generated(r).as_ref() == Some(h))
            },
        ),
        "non_arf" => implication(
            LimitSparse,
            |h| odd_frobenius(h) && h.multiplicity() % 2 == 1,
            |h| {
                let r = kap(h) / 2;
                if *h == three_n_plus(6 * r + 1) {
                    is_arf(h)
                } else if r > 1 && odd_generated(r).as_ref() == Some(h) {
                    let (a, b) = (4 * r as i64 - 1, 4 * r as i64 - 3);
                    !is_arf(h) && h.contains(a) && h.contains(b) && !h.contains(2 * a - b)
                } else {
                    false
                }
            },
        ),
        "genus_bound_odd" => implication(Sparse, odd_frobenius, |h| {
            check_genus_bounds(h).unwrap_or(false)
        }),
        "doubled_tail" => implication(
            Sparse,
            |h| odd_frobenius(h) && h.genus() > 4 * (kap(h) / 2) + 1,
            doubling_round_trip,
        ),
        "limit_classification" => implication(LimitSparse, any, |h| {
            classify_limit_sparse(h).is_ok_and(|t| t.is_classified())
        }),
        other => return Err(Error::UnknownTheorem(other.to_string())),
    })
}

/// Verifies one registered result for every genus in `1..=g_max`.
pub fn verify(theorem_id: &str, g_max: u32) -> Result<VerificationReport> {
    verify_with(&Enumerator::from_env()?, theorem_id, g_max)
}

pub fn verify_with(
    enumerator: &Enumerator,
    theorem_id: &str,
    g_max: u32,
) -> Result<VerificationReport> {
    let check = check_for(theorem_id)?;
    if g_max > enumerator.max_genus() {
        return Err(Error::ResourceLimit {
            requested: g_max,
            cap: enumerator.max_genus(),
        });
    }
    let start = Instant::now();
    let mut checked = 0u64;
    let mut failures = Vec::new();
    match check {
        Check::Implication {
            scope,
            hypothesis,
            conclusion,
        } => {
            for genus in 1..=g_max {
                let candidates = enumerator.par_select(genus, scope, hypothesis)?;
                checked += candidates.len() as u64;
                let bad: Vec<Vec<u32>> = candidates
                    .par_iter()
                    .filter(|h| !conclusion(h))
                    .map(|h| h.gaps().to_vec())
                    .collect();
                failures.extend(bad);
            }
        }
        Check::Catalog { id, kappa: k } => {
            let expected: BTreeSet<NumericalSemigroup> = catalog(id, Some(1..=g_max))?
                .into_iter()
                .map(|e| e.semigroup)
                .filter(|s| s.genus() <= g_max)
                .collect();
            let mut found = BTreeSet::new();
            for genus in 1..=g_max {
                found.extend(enumerator.par_select(genus, Filter::Sparse, |h| kap(h) == k)?);
            }
            checked = found.len() as u64;
            failures.extend(
                found
                    .symmetric_difference(&expected)
                    .map(|s| s.gaps().to_vec()),
            );
        }
    }
    Ok(VerificationReport {
        theorem_id: theorem_id.to_string(),
        genus_range: (1, g_max),
        checked,
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Verifies every registered result.
pub fn verify_all(enumerator: &Enumerator, g_max: u32) -> Result<Vec<VerificationReport>> {
    theorem_ids()
        .map(|id| verify_with(enumerator, id, g_max))
        .collect()
}
