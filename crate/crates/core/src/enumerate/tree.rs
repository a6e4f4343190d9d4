//! Genus tree nodes.
//!
//! Each node stores membership as a 128-bit mask together with, for every
//! `y < 128`, the number of unordered decompositions `y = a + b` with
//! `a, b` positive members. A member is a minimal generator exactly when
//! its decomposition count is zero, and removing a generator `x` only
//! lowers the count of each `y > x` with `y − x` a member.

use crate::semigroup::NumericalSemigroup;

pub(crate) const WINDOW: usize = 128;

/// Largest genus the node window can represent: every minimal generator of
/// a genus-`g` semigroup is at most `3g`, which must stay below `WINDOW`.
pub const MAX_REPRESENTABLE_GENUS: u32 = 40;

#[derive(Clone)]
pub(crate) struct Node {
    members: u128,
    decompositions: [u8; WINDOW],
    /// -1 for ℕ.
    frobenius: i32,
    genus: u32,
}

impl Node {
    pub(crate) fn root() -> Self {
        let mut decompositions = [0u8; WINDOW];
        for (y, d) in decompositions.iter_mut().enumerate() {
            *d = (y / 2) as u8;
        }
        Node {
            members: u128::MAX,
            decompositions,
            frobenius: -1,
            genus: 0,
        }
    }

    #[inline]
    pub(crate) fn genus(&self) -> u32 {
        self.genus
    }

    #[inline]
    fn has(&self, n: usize) -> bool {
        n >= WINDOW || self.members >> n & 1 == 1
    }

    #[inline]
    pub(crate) fn multiplicity(&self) -> u32 {
        (self.members & !1).trailing_zeros()
    }

    /// `κ = 2g − λ_g`; 0 for ℕ.
    #[inline]
    pub(crate) fn kappa(&self) -> u32 {
        (2 * self.genus as i32 - self.frobenius.max(0)) as u32
    }

    /// Range of child candidates `x`: minimal generators above the
    /// Frobenius number lie in `(F, F + n₁]`. With `sparse_only`, only
    /// `x ≤ F + 2` keeps the appended leap narrow.
    pub(crate) fn child_candidates(&self, sparse_only: bool) -> (u32, u32) {
        if self.genus == 0 {
            return (1, 1);
        }
        let f = self.frobenius as u32;
        let mut hi = f + self.multiplicity();
        if sparse_only {
            hi = hi.min(f + 2);
        }
        (f + 1, hi.min(WINDOW as u32 - 1))
    }

    #[inline]
    pub(crate) fn is_generator(&self, x: u32) -> bool {
        let x = x as usize;
        x < WINDOW && self.has(x) && self.decompositions[x] == 0
    }

    /// The child `H \ {x}`; `x` must be a minimal generator above `F`.
    pub(crate) fn remove(&self, x: u32) -> Node {
        debug_assert!(self.is_generator(x) && x as i32 > self.frobenius);
        let x = x as usize;
        let mut child = self.clone();
        child.members &= !(1u128 << x);
        for y in x + 1..WINDOW {
            if self.has(y - x) {
                child.decompositions[y] -= 1;
            }
        }
        child.frobenius = x as i32;
        child.genus += 1;
        child
    }

    pub(crate) fn gaps(&self) -> Vec<u32> {
        (1..=self.frobenius.max(0) as u32)
            .filter(|&n| !self.has(n as usize))
            .collect()
    }

    pub(crate) fn to_semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::from_gaps_unchecked(self.gaps())
    }
}
