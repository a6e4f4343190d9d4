//! Constructive families and the doubling, halving and reduction transforms.

use serde::{Deserialize, Serialize};

use crate::analytics::{is_sparse, kappa};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A parametric recipe for one of the named semigroup families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// `H_g`: gaps exactly `1..=g`.
    Ordinary { genus: u32 },
    /// `mℕ + H_g` with `0 < m < g`, taken as the union `mℕ ∪ {n > g}`.
    Hyperordinary { multiplicity: u32, g: u32 },
    /// `⟨2, 2g+1⟩`.
    Hyperelliptic { genus: u32 },
    /// `⟨2j+1 : r ≤ j ≤ 2r−1⟩ ∪ H_{6r+1}` with `r > 1`.
    OddGeneratedLimit { r: u32 },
    /// `2H′ ∪ H_{2g−2r−1}` for `H′` of genus `r` and `g ≥ 4r + 1`.
    Doubled {
        inner: NumericalSemigroup,
        genus: u32,
        r: u32,
    },
}

impl FamilySpec {
    /// Short machine name, matching the CLI `--family` values.
    pub fn id(&self) -> &'static str {
        match self {
            FamilySpec::Ordinary { .. } => "ordinary",
            FamilySpec::Hyperordinary { .. } => "hyperordinary",
            FamilySpec::Hyperelliptic { .. } => "hyperelliptic",
            FamilySpec::OddGeneratedLimit { .. } => "odd-generated-limit",
            FamilySpec::Doubled { .. } => "doubled",
        }
    }

    pub fn construct(&self) -> Result<NumericalSemigroup> {
        construct(self)
    }
}

/// Builds the semigroup described by `spec`.
pub fn construct(spec: &FamilySpec) -> Result<NumericalSemigroup> {
    match *spec {
        FamilySpec::Ordinary { genus } => Ok(NumericalSemigroup::ordinary(genus)),
        FamilySpec::Hyperordinary { multiplicity: m, g } => {
            if m == 0 || m >= g {
                return Err(Error::InvalidFamilyParams(format!(
                    "hyperordinary needs 0 < m < g, got m = {m}, g = {g}"
                )));
            }
            let gaps: Vec<u32> = (1..=g).filter(|n| n % m != 0).collect();
            // The union is closed for every valid (m, g); from_gaps re-checks.
            NumericalSemigroup::from_gaps(&gaps)
        }
        FamilySpec::Hyperelliptic { genus } => {
            Ok(NumericalSemigroup::from_gaps_unchecked(
                (0..genus).map(|i| 2 * i + 1).collect(),
            ))
        }
        FamilySpec::OddGeneratedLimit { r } => {
            if r <= 1 {
                return Err(Error::InvalidFamilyParams(format!(
                    "odd-generated-limit needs r > 1, got r = {r}"
                )));
            }
            let member = |n: u32| {
                n == 0
                    || (n % 2 == 1 && (2 * r + 1..=4 * r - 1).contains(&n))
                    || (n % 2 == 0 && (4 * r + 2..=6 * r).contains(&n))
                    || n >= 6 * r + 2
            };
            let gaps: Vec<u32> = (1..6 * r + 2).filter(|&n| !member(n)).collect();
            NumericalSemigroup::from_gaps(&gaps)
        }
        FamilySpec::Doubled {
            ref inner,
            genus,
            r,
        } => double_semigroup(inner, genus, r),
    }
}

/// `2H′ ∪ {n ≥ 2g − 2r}`: genus `g`, Frobenius number `2g − 2r − 1`, with
/// exactly `r` even gaps.
pub fn double_semigroup(inner: &NumericalSemigroup, g: u32, r: u32) -> Result<NumericalSemigroup> {
    if inner.genus() != r {
        return Err(Error::InvalidFamilyParams(format!(
            "inner semigroup has genus {} but r = {r}",
            inner.genus()
        )));
    }
    if g < 4 * r + 1 {
        return Err(Error::InvalidFamilyParams(format!(
            "doubling needs g ≥ 4r + 1, got g = {g}, r = {r}"
        )));
    }
    let tail = 2 * g - 2 * r;
    let gaps = (1..tail)
        .filter(|&n| n % 2 == 1 || !inner.has(n / 2))
        .collect();
    Ok(NumericalSemigroup::from_gaps_unchecked(gaps))
}

/// `{m : 2m ∈ H}`. Its genus is the number of even gaps of `H`.
pub fn halve_semigroup(h: &NumericalSemigroup) -> NumericalSemigroup {
    let gaps = h
        .gaps()
        .iter()
        .filter(|&&g| g % 2 == 0)
        .map(|&g| g / 2)
        .collect();
    NumericalSemigroup::from_gaps_unchecked(gaps)
}

/// Fills the tail of a sparse semigroup of genus `g ≥ 2κ − 1` until the
/// genus drops to `2κ − 1`.
///
/// The last `g − 2κ + 1` gaps are spaced by two, so adding them back keeps
/// `κ` fixed and leaves Frobenius number `3κ − 2`. The result contains `h`.
pub fn reduce_to_limit(h: &NumericalSemigroup) -> Result<NumericalSemigroup> {
    if !is_sparse(h)? {
        return Err(Error::NotApplicable("reduction needs a sparse semigroup".into()));
    }
    let k = kappa(h)?;
    let g = h.genus();
    if g + 1 < 2 * k {
        return Err(Error::NotApplicable(format!(
            "reduction needs g ≥ 2κ − 1, got g = {g}, κ = {k}"
        )));
    }
    let keep = (2 * k - 1) as usize;
    NumericalSemigroup::from_gaps(&h.gaps()[..keep])
}
