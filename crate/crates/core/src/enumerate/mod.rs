//! Exhaustive enumeration of numerical semigroups by genus.
//!
//! The genus tree has ℕ at its root; the children of `H` are `H \ {x}` for
//! each minimal generator `x` of `H` larger than its Frobenius number. Every
//! semigroup of genus `g` sits at depth `g` exactly once, and visiting
//! children by increasing `x` yields each level in lexicographic order of
//! gap lists, because a child's gap list extends its parent's.
//!
//! Sparse semigroups form a subtree: a child only appends a gap after the
//! Frobenius number, so a wide leap is never repaired, while the parent
//! `H ∪ {λ_g}` of a sparse semigroup is sparse. Sparse enumeration
//! therefore prunes every branch whose new gap is more than 2 past the
//! previous one.

mod tree;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analytics::is_arf;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

pub use tree::MAX_REPRESENTABLE_GENUS;
use tree::Node;

pub const DEFAULT_MAX_GENUS: u32 = 35;

/// Environment variable overriding the genus cap.
pub const MAX_GENUS_ENV: &str = "SPARSEGROUP_MAX_GENUS";

/// Which semigroups an enumeration keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    All,
    Sparse,
    LimitSparse,
    Arf,
}

impl Filter {
    fn sparse_only(self) -> bool {
        matches!(self, Filter::Sparse | Filter::LimitSparse)
    }

    fn keeps_node(self, node: &Node) -> bool {
        match self {
            Filter::LimitSparse => node.genus() + 1 == 2 * node.kappa(),
            _ => true,
        }
    }
}

/// Depth-first walk over a subtree, yielding the nodes at `target` depth.
struct NodeIter {
    stack: Vec<(Node, u32, u32)>,
    target: u32,
    sparse_only: bool,
}

impl NodeIter {
    fn new(start: Node, target: u32, sparse_only: bool) -> Self {
        let (lo, hi) = start.child_candidates(sparse_only);
        let stack = if start.genus() <= target {
            vec![(start, lo, hi)]
        } else {
            Vec::new()
        };
        NodeIter {
            stack,
            target,
            sparse_only,
        }
    }
}

impl Iterator for NodeIter {
    type Item = Node;

    fn next(&mut self) -> Option<Node> {
        loop {
            let top = self.stack.last_mut()?;
            if top.0.genus() == self.target {
                return self.stack.pop().map(|(n, _, _)| n);
            }
            let (node, next, hi) = top;
            let found = (*next..=*hi).find(|&x| node.is_generator(x));
            match found {
                Some(x) => {
                    *next = x + 1;
                    let child = node.remove(x);
                    let (lo, hi) = child.child_candidates(self.sparse_only);
                    self.stack.push((child, lo, hi));
                }
                None => {
                    self.stack.pop();
                }
            }
        }
    }
}

/// Lazily yields the semigroups of one genus in lexicographic gap order.
pub struct SemigroupStream {
    nodes: NodeIter,
    filter: Filter,
}

impl Iterator for SemigroupStream {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        for node in self.nodes.by_ref() {
            if !self.filter.keeps_node(&node) {
                continue;
            }
            let s = node.to_semigroup();
            if self.filter == Filter::Arf && !is_arf(&s) {
                continue;
            }
            return Some(s);
        }
        None
    }
}

/// Semigroup count at one genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusCount {
    pub genus: u32,
    pub count: u64,
}

/// Enumeration settings: the genus cap and the depth at which the tree is
/// split into independent parallel work units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumerator {
    max_genus: u32,
    split_depth: u32,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            max_genus: DEFAULT_MAX_GENUS,
            split_depth: 10,
        }
    }
}

impl Enumerator {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reads the cap from `SPARSEGROUP_MAX_GENUS` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_GENUS_ENV) {
            Ok(v) => {
                let cap = v.trim().parse().map_err(|_| {
                    Error::InvalidInput(format!("{MAX_GENUS_ENV} must be an integer, got {v:?}"))
                })?;
                Self::new().with_max_genus(cap)
            }
            Err(_) => Ok(Self::new()),
        }
    }

    /// Caps above [`MAX_REPRESENTABLE_GENUS`] are rejected.
    pub fn with_max_genus(mut self, cap: u32) -> Result<Self> {
        if cap > MAX_REPRESENTABLE_GENUS {
            return Err(Error::ResourceLimit {
                requested: cap,
                cap: MAX_REPRESENTABLE_GENUS,
            });
        }
        self.max_genus = cap;
        Ok(self)
    }

    pub fn with_split_depth(mut self, depth: u32) -> Self {
        self.split_depth = depth;
        self
    }

    pub fn max_genus(&self) -> u32 {
        self.max_genus
    }

    fn check(&self, genus: u32) -> Result<()> {
        if genus > self.max_genus {
            return Err(Error::ResourceLimit {
                requested: genus,
                cap: self.max_genus,
            });
        }
        Ok(())
    }

    /// Every semigroup of genus `g`, each once, in lexicographic gap order.
    pub fn semigroups_of_genus(&self, genus: u32) -> Result<SemigroupStream> {
        self.stream(genus, Filter::All)
    }

    /// Sparse (or limit sparse) semigroups of genus `g ≥ 1`.
    pub fn sparse_of_genus(&self, genus: u32, limit_only: bool) -> Result<SemigroupStream> {
        if genus == 0 {
            return Err(Error::NotDefined("sparseness"));
        }
        let filter = if limit_only {
            Filter::LimitSparse
        } else {
            Filter::Sparse
        };
        self.stream(genus, filter)
    }

    pub fn stream(&self, genus: u32, filter: Filter) -> Result<SemigroupStream> {
        self.check(genus)?;
        Ok(SemigroupStream {
            nodes: NodeIter::new(Node::root(), genus, filter.sparse_only()),
            filter,
        })
    }

    /// Roots of the independent subtrees, in lexicographic order.
    fn frontier(&self, genus: u32, sparse_only: bool) -> Vec<Node> {
        let depth = self.split_depth.min(genus);
        NodeIter::new(Node::root(), depth, sparse_only).collect()
    }

    /// Runs `work` on every subtree in parallel and returns the per-subtree
    /// results in lexicographic order.
    fn par_subtrees<T, W>(&self, genus: u32, sparse_only: bool, work: W) -> Vec<T>
    where
        T: Send,
        W: Fn(NodeIter) -> T + Sync,
    {
        self.frontier(genus, sparse_only)
            .into_par_iter()
            .map(|root| work(NodeIter::new(root, genus, sparse_only)))
            .collect()
    }

    /// Parallel equivalent of [`Enumerator::stream`] followed by
    /// `filter(pred)`, materialized in the same order.
    pub fn par_select<P>(&self, genus: u32, filter: Filter, pred: P) -> Result<Vec<NumericalSemigroup>>
    where
        P: Fn(&NumericalSemigroup) -> bool + Sync,
    {
        self.check(genus)?;
        let chunks = self.par_subtrees(genus, filter.sparse_only(), |nodes| {
            SemigroupStream { nodes, filter }
                .filter(|s| pred(s))
                .collect::<Vec<_>>()
        });
        Ok(chunks.into_iter().flatten().collect())
    }

    /// Streams one genus level in bounded memory: batches of subtrees are
    /// enumerated in parallel and handed to `sink` in lexicographic order.
    pub fn par_stream<S, E>(&self, genus: u32, filter: Filter, mut sink: S) -> Result<(), E>
    where
        S: FnMut(Vec<NumericalSemigroup>) -> Result<(), E>,
        E: From<Error>,
    {
        self.check(genus)?;
        let sparse_only = filter.sparse_only();
        let frontier = self.frontier(genus, sparse_only);
        let batch = 4 * rayon::current_num_threads().max(1);
        for roots in frontier.chunks(batch) {
            let chunk: Vec<Vec<NumericalSemigroup>> = roots
                .par_iter()
                .map(|root| {
                    SemigroupStream {
                        nodes: NodeIter::new(root.clone(), genus, sparse_only),
                        filter,
                    }
                    .collect()
                })
                .collect();
            sink(chunk.into_iter().flatten().collect())?;
        }
        Ok(())
    }

    pub fn par_collect(&self, genus: u32, filter: Filter) -> Result<Vec<NumericalSemigroup>> {
        self.par_select(genus, filter, |_| true)
    }

    /// Number of semigroups of genus `g` passing `filter`.
    pub fn count(&self, genus: u32, filter: Filter) -> Result<u64> {
        self.check(genus)?;
        let counts = self.par_subtrees(genus, filter.sparse_only(), |nodes| match filter {
            Filter::All | Filter::Sparse => nodes.count() as u64,
            Filter::LimitSparse | Filter::Arf => SemigroupStream { nodes, filter }.count() as u64,
        });
        Ok(counts.into_iter().sum())
    }

    /// Counts for every genus in `1..=g_max`.
    pub fn count_by_genus(&self, g_max: u32, filter: Filter) -> Result<Vec<GenusCount>> {
        self.check(g_max)?;
        (1..=g_max)
            .map(|genus| Ok(GenusCount {
                genus,
                count: self.count(genus, filter)?,
            }))
            .collect()
    }
}

/// [`Enumerator::semigroups_of_genus`] with the default cap.
pub fn semigroups_of_genus(genus: u32) -> Result<SemigroupStream> {
    Enumerator::new().semigroups_of_genus(genus)
}

/// [`Enumerator::sparse_of_genus`] with the default cap.
pub fn sparse_of_genus(genus: u32, limit_only: bool) -> Result<SemigroupStream> {
    Enumerator::new().sparse_of_genus(genus, limit_only)
}

/// [`Enumerator::count_by_genus`] with the default cap.
pub fn count_by_genus(g_max: u32, filter: Filter) -> Result<Vec<GenusCount>> {
    Enumerator::new().count_by_genus(g_max, filter)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gap_lists(s: impl Iterator<Item = NumericalSemigroup>) -> Vec<Vec<u32>> {
        s.map(|h| h.gaps().to_vec()).collect()
    }

    #[test]
    fn small_levels() {
        assert_eq!(
            gap_lists(semigroups_of_genus(0).unwrap()),
            vec![Vec::<u32>::new()]
        );
        assert_eq!(gap_lists(semigroups_of_genus(1).unwrap()), vec![vec![1]]);
        assert_eq!(
            gap_lists(semigroups_of_genus(3).unwrap()),
            vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 2, 5], vec![1, 3, 5]]
        );
        assert_eq!(semigroups_of_genus(8).unwrap().count(), 67);
    }

    #[test]
    fn sparse_levels() {
        assert_eq!(
            gap_lists(sparse_of_genus(2, false).unwrap()),
            vec![vec![1, 2], vec![1, 3]]
        );
        assert_eq!(gap_lists(sparse_of_genus(1, false).unwrap()), vec![vec![1]]);
        let even: Vec<_> = sparse_of_genus(7, true)
            .unwrap()
            .filter(|h| h.frobenius().unwrap() % 2 == 0)
            .collect();
        assert_eq!(gap_lists(even.into_iter()), vec![vec![1, 2, 4, 5, 7, 8, 10]]);
        assert!(sparse_of_genus(0, false).is_err());
    }

    #[test]
    fn counts() {
        let all: Vec<(u32, u64)> = count_by_genus(5, Filter::All)
            .unwrap()
            .into_iter()
            .map(|c| (c.genus, c.count))
            .collect();
        assert_eq!(all, vec![(1, 1), (2, 2), (3, 4), (4, 7), (5, 12)]);
        let sparse: Vec<u64> = count_by_genus(3, Filter::Sparse)
            .unwrap()
            .into_iter()
            .map(|c| c.count)
            .collect();
        assert_eq!(sparse, vec![1, 2, 3]);
        assert_eq!(count_by_genus(1, Filter::All).unwrap()[0].count, 1);
    }

    #[test]
    fn cap_is_enforced() {
        let e = Enumerator::new().with_max_genus(6).unwrap();
        assert_eq!(
            e.semigroups_of_genus(7).err(),
            Some(Error::ResourceLimit { requested: 7, cap: 6 })
        );
        assert!(e.count_by_genus(7, Filter::All).is_err());
        assert!(Enumerator::new().with_max_genus(41).is_err());
        assert!(semigroups_of_genus(36).is_err());
    }

    #[test]
    fn parallel_matches_sequential() {
        for depth in [0, 1, 3, 7, 20] {
            let e = Enumerator::new().with_split_depth(depth);
            for filter in [Filter::All, Filter::Sparse, Filter::LimitSparse, Filter::Arf] {
                let seq: Vec<_> = e.stream(12, filter).unwrap().collect();
                assert_eq!(e.par_collect(12, filter).unwrap(), seq);
                assert_eq!(e.count(12, filter).unwrap(), seq.len() as u64);
                let mut streamed = Vec::new();
                e.par_stream(12, filter, |batch| {
                    streamed.extend(batch);
                    Ok::<_, Error>(())
                })
                .unwrap();
                assert_eq!(streamed, seq);
            }
        }
    }
}
