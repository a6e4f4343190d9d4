//! The numerical semigroup value type.
//!
//! A semigroup is stored canonically by its sorted gap list together with a
//! membership table over `[0, c + n₁)`, where `c` is the conductor and `n₁`
//! the multiplicity. Anything at or beyond the conductor is a member, so the
//! table answers every membership query in constant time.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An additively closed subset of ℕ containing 0 with finite complement.
///
/// Equality, ordering and hashing only look at the gap list.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct NumericalSemigroup {
    gaps: Vec<u32>,
    membership: Vec<bool>,
    multiplicity: u32,
}

impl NumericalSemigroup {
    /// The semigroup ℕ itself (genus 0).
    pub fn natural() -> Self {
        NumericalSemigroup {
            gaps: Vec::new(),
            membership: vec![true],
            multiplicity: 1,
        }
    }

    /// The ordinary semigroup `H_g = {0, g+1, g+2, …}`.
    pub fn ordinary(genus: u32) -> Self {
        Self::from_gaps_unchecked((1..=genus).collect())
    }

    /// Builds the semigroup whose gap set is exactly `gaps`.
    pub fn from_gaps(gaps: &[u32]) -> Result<Self> {
        if let Some(&first) = gaps.first() {
            if first == 0 {
                return Err(Error::InvalidInput("0 cannot be a gap".into()));
            }
        }
        if let Some(w) = gaps.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(format!(
                "gaps must be strictly increasing ({} is followed by {})",
                w[0], w[1]
            )));
        }
        let candidate = Self::from_gaps_unchecked(gaps.to_vec());
        candidate.check_closure()?;
        Ok(candidate)
    }

    /// Smallest numerical semigroup containing every generator.
    ///
    /// Membership is sieved over a window that starts at `4·max(gens)` and
    /// doubles until a run of `n₁` consecutive members shows up; such a run
    /// forces every larger integer into the semigroup.
    pub fn from_generators(gens: &[u32]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidInput("at least one generator is required".into()));
        }
        if gens.contains(&0) {
            return Err(Error::InvalidInput("generators must be positive".into()));
        }
        let gcd = gens.iter().copied().fold(0, gcd);
        if gcd > 1 {
            return Err(Error::InfiniteGenus { gcd });
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let smallest = gens[0] as usize;
        let mut window = 4 * *gens.last().unwrap() as usize;
        loop {
            let mut member = vec![false; window];
            member[0] = true;
            let mut run = 0usize;
            let mut run_start = None;
            for n in 1..window {
                member[n] = gens
                    .iter()
                    .map(|&g| g as usize)
                    .take_while(|&g| g <= n)
                    .any(|g| member[n - g]);
                if member[n] {
                    run += 1;
                    if run == smallest {
                        run_start = Some(n + 1 - smallest);
                        break;
                    }
                } else {
                    run = 0;
                }
            }
            if let Some(conductor) = run_start {
                let gaps = (1..conductor as u32)
                    .filter(|&n| !member[n as usize])
                    .collect();
                return Ok(Self::from_gaps_unchecked(gaps));
            }
            window *= 2;
        }
    }

    /// Builds the semigroup without the additive-closure check. The caller
    /// guarantees `gaps` is strictly increasing, positive and closed.
    pub(crate) fn from_gaps_unchecked(gaps: Vec<u32>) -> Self {
        let conductor = gaps.last().map_or(0, |&f| f + 1);
        let mut is_gap = vec![false; conductor as usize];
        for &g in &gaps {
            is_gap[g as usize] = true;
        }
        let multiplicity = (1..=conductor)
            .find(|&n| n == conductor || !is_gap[n as usize])
            .unwrap_or(1);
        let len = (conductor + multiplicity) as usize;
        let membership = (0..len)
            .map(|n| n >= conductor as usize || !is_gap[n])
            .collect();
        NumericalSemigroup {
            gaps,
            membership,
            multiplicity,
        }
    }

    /// Reports the first violation of additive closure, if any.
    fn check_closure(&self) -> Result<()> {
        for &gap in &self.gaps {
            for a in self.multiplicity..=gap / 2 {
                let b = gap - a;
                if self.has(a) && self.has(b) {
                    return Err(Error::NotASemigroup { gap, a, b });
                }
            }
        }
        Ok(())
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn genus(&self) -> u32 {
        self.gaps.len() as u32
    }

    /// Largest gap; `None` for ℕ.
    pub fn frobenius(&self) -> Option<u32> {
        self.gaps.last().copied()
    }

    /// `λ_g + 1`, or 0 for ℕ.
    pub fn conductor(&self) -> u32 {
        self.frobenius().map_or(0, |f| f + 1)
    }

    /// Smallest positive member.
    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// Membership test; negative integers are never members.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        match usize::try_from(n) {
            Ok(i) => self.membership.get(i).copied().unwrap_or(true),
            Err(_) => true,
        }
    }

    #[inline]
    pub(crate) fn has(&self, n: u32) -> bool {
        self.membership.get(n as usize).copied().unwrap_or(true)
    }

    /// Members strictly below `bound`, in increasing order.
    pub fn members_below(&self, bound: u32) -> impl Iterator<Item = u32> + '_ {
        (0..bound).filter(move |&n| self.has(n))
    }

    /// Members `n` with `0 < n < c`, in increasing order.
    pub fn small_members(&self) -> impl Iterator<Item = u32> + '_ {
        (self.multiplicity..self.conductor()).filter(move |&n| self.has(n))
    }

    /// The minimal system of generators, in increasing order.
    ///
    /// Every minimal generator is below `c + n₁`: anything larger splits as
    /// `n₁ + (n - n₁)` with `n - n₁ ≥ c`.
    pub fn minimal_generators(&self) -> Vec<u32> {
        let m = self.multiplicity;
        let limit = (self.conductor() + m).max(m + 1);
        (m..limit)
            .filter(|&n| self.has(n))
            .filter(|&n| !(m..=n / 2).any(|h| self.has(h) && self.has(n - h)))
            .collect()
    }

    pub fn is_ordinary(&self) -> bool {
        self.frobenius() == Some(self.genus())
    }

    /// Number of even gaps.
    pub fn even_gap_count(&self) -> u32 {
        self.gaps.iter().filter(|&&g| g % 2 == 0).count() as u32
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.gaps == other.gaps
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.gaps.hash(state);
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gaps.cmp(&other.gaps)
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup(gaps = {:?})", self.gaps)
    }
}

impl fmt::Display for NumericalSemigroup {
    /// Formats as the comma-separated gap list (empty for ℕ).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in &self.gaps {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        Ok(())
    }
}

impl TryFrom<Vec<u32>> for NumericalSemigroup {
    type Error = Error;

    fn try_from(gaps: Vec<u32>) -> Result<Self> {
        Self::from_gaps(&gaps)
    }
}

impl From<NumericalSemigroup> for Vec<u32> {
    fn from(s: NumericalSemigroup) -> Self {
        s.gaps
    }
}
