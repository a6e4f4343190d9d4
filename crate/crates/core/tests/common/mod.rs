//! Brute-force reference implementations, independent of the library.
#![allow(dead_code)]

/// Every gap set of genus `g`, in lexicographic order.
///
/// Gaps of a genus-`g` semigroup lie in `[1, 2g − 1]`, so it suffices to
/// run over the `g`-subsets of that window and keep those whose
/// complement is closed under addition.
pub fn semigroups_of_genus(g: u32) -> Vec<Vec<u32>> {
    if g == 0 {
        return vec![Vec::new()];
    }
    let top = 2 * g - 1;
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(g as usize);
    subsets(1, top, g as usize, &mut pick, &mut out);
    out
}

fn subsets(next: u32, top: u32, want: usize, pick: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if pick.len() == want {
        if is_closed(pick) {
            out.push(pick.clone());
        }
        return;
    }
    let room = (want - pick.len()) as u32;
    for n in next..=top + 1 - room {
        pick.push(n);
        subsets(n + 1, top, want, pick, out);
        pick.pop();
    }
}

/// The complement of `gaps` in ℕ is closed under addition.
pub fn is_closed(gaps: &[u32]) -> bool {
    let f = gaps.last().copied().unwrap_or(0);
    let member = |n: u32| !gaps.contains(&n);
    (1..=f)
        .filter(|&a| member(a))
        .all(|a| (a..=f - a).filter(|&b| member(b)).all(|b| member(a + b)))
}

/// Gaps of `⟨gens⟩` by a plain sieve over a generous window.
pub fn sieve_gaps(gens: &[u32]) -> Vec<u32> {
    let max = *gens.iter().max().unwrap() as usize;
    let window = max * max + 1;
    let mut member = vec![false; window];
    member[0] = true;
    for n in 1..window {
        member[n] = gens.iter().any(|&a| a as usize <= n && member[n - a as usize]);
    }
    (1..window as u32).filter(|&n| !member[n as usize]).collect()
}

/// The Arf condition `x + y − z ∈ H` for all members `x ≥ y ≥ z`, checked
/// over every triple below twice the Frobenius number.
pub fn is_arf(gaps: &[u32]) -> bool {
    let f = gaps.last().copied().unwrap_or(0);
    let bound = 2 * f + 2;
    let member = |n: u32| !gaps.contains(&n);
    let members: Vec<u32> = (0..bound).filter(|&n| member(n)).collect();
    members.iter().all(|&x| {
        members.iter().filter(|&&y| y <= x).all(|&y| {
            members.iter().filter(|&&z| z <= y).all(|&z| member(x + y - z))
        })
    })
}

/// Known semigroup counts by genus, `n_0 … n_10`.
pub const COUNTS: [u64; 11] = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204];
