//! Leap decomposition and the predicates defined on a semigroup.
//!
//! A *leap* is a pair of consecutive gaps `(λ_i, λ_{i+1})`. Its width is 1
//! (single) or 2 (double) in a sparse semigroup. With `κ = 2g − λ_g`, a
//! sparse semigroup of genus `g` has `S = κ − 1` single and `D = g − κ`
//! double leaps.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A pair of consecutive gaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Leap {
    pub from: u32,
    pub to: u32,
}

impl Leap {
    pub fn width(&self) -> u32 {
        self.to - self.from
    }
}

/// The leap decomposition of a semigroup of positive genus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeapProfile {
    /// Every consecutive gap pair, in order. Leaps wider than 2 are kept
    /// here but counted in neither `single` nor `double`.
    pub leaps: Vec<Leap>,
    pub single: u32,
    pub double: u32,
    pub kappa: u32,
    /// `⌊κ/2⌋`: `λ_g = 2g − 2r` when `λ_g` is even, `2g − (2r+1)` when odd.
    pub r: u32,
}

impl LeapProfile {
    pub fn wide_leaps(&self) -> impl Iterator<Item = &Leap> {
        self.leaps.iter().filter(|l| l.width() > 2)
    }
}

/// Parity class of the Frobenius number relative to the genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SymmetryClass {
    /// `λ_g = 2g − 1`
    Symmetric,
    /// `λ_g = 2g − 2`
    QuasiSymmetric,
    Neither,
}

fn positive_genus(h: &NumericalSemigroup, what: &'static str) -> Result<u32> {
    h.frobenius().ok_or(Error::NotDefined(what))
}

/// `κ = 2g − λ_g`, always in `[1, g]`.
pub fn kappa(h: &NumericalSemigroup) -> Result<u32> {
    let f = positive_genus(h, "κ")?;
    Ok(2 * h.genus() - f)
}

pub fn leap_profile(h: &NumericalSemigroup) -> Result<LeapProfile> {
    let k = kappa(h)?;
    let leaps: Vec<Leap> = h
        .gaps()
        .windows(2)
        .map(|w| Leap { from: w[0], to: w[1] })
        .collect();
    let single = leaps.iter().filter(|l| l.width() == 1).count() as u32;
    let double = leaps.iter().filter(|l| l.width() == 2).count() as u32;
    Ok(LeapProfile {
        leaps,
        single,
        double,
        kappa: k,
        r: k / 2,
    })
}

/// Consecutive gaps differ by at most 2.
pub fn is_sparse(h: &NumericalSemigroup) -> Result<bool> {
    positive_genus(h, "sparseness")?;
    Ok(h.gaps().windows(2).all(|w| w[1] - w[0] <= 2))
}

/// Sparse with as many single as double leaps, i.e. `g = 2κ − 1`.
pub fn is_limit_sparse(h: &NumericalSemigroup) -> Result<bool> {
    Ok(is_sparse(h)? && h.genus() + 1 == 2 * kappa(h)?)
}

/// `2a − b ∈ H` for all members `a ≥ b ≥ n₁`.
///
/// Only `a < c` needs checking: for `a ≥ c`, `2a − b ≥ a ≥ c`.
pub fn is_arf(h: &NumericalSemigroup) -> bool {
    let members: Vec<u32> = h.small_members().collect();
    members.iter().enumerate().all(|(i, &a)| {
        members[..=i]
            .iter()
            .all(|&b| h.has(2 * a - b))
    })
}

/// Number of even gaps (`γ` of a γ-hyperelliptic semigroup).
pub fn gamma_even_gaps(h: &NumericalSemigroup) -> u32 {
    h.even_gap_count()
}

pub fn symmetry_class(h: &NumericalSemigroup) -> Result<SymmetryClass> {
    let f = positive_genus(h, "symmetry class")?;
    let g = h.genus();
    Ok(if f + 1 == 2 * g {
        SymmetryClass::Symmetric
    } else if f + 2 == 2 * g {
        SymmetryClass::QuasiSymmetric
    } else {
        SymmetryClass::Neither
    })
}

/// Every leap from index `2κ − 2` on (1-based) is double.
///
/// Requires a sparse semigroup with `g ≥ 2κ − 1`.
pub fn tail_is_double_leaps(h: &NumericalSemigroup) -> Result<bool> {
    if !is_sparse(h)? {
        return Err(Error::NotApplicable("tail check needs a sparse semigroup".into()));
    }
    let k = kappa(h)?;
    let g = h.genus();
    if g + 1 < 2 * k {
        return Err(Error::NotApplicable(format!(
            "tail check needs g ≥ 2κ − 1, got g = {g}, κ = {k}"
        )));
    }
    // leap i pairs gaps[i - 1] and gaps[i]
    let first = (2 * k).saturating_sub(2).max(1) as usize;
    let gaps = h.gaps();
    Ok((first..gaps.len()).all(|i| gaps[i] - gaps[i - 1] == 2))
}

/// Every member below the conductor is a multiple of the multiplicity,
/// so `H = n₁ℕ ∪ {n ≥ c}`. Includes the ordinary semigroups.
pub fn is_hyperordinary(h: &NumericalSemigroup) -> bool {
    let m = h.multiplicity();
    h.small_members().all(|n| n % m == 0)
}

/// Ordinary, hyperordinary, or multiplicity `m > 1` with exactly one gap
/// strictly between `m` and `2m`.
pub fn is_negatively_graded(h: &NumericalSemigroup) -> Result<bool> {
    positive_genus(h, "negative grading")?;
    if h.is_ordinary() || is_hyperordinary(h) {
        return Ok(true);
    }
    let m = h.multiplicity();
    let between = (m + 1..2 * m).filter(|&n| !h.has(n)).count();
    Ok(m > 1 && between == 1)
}
