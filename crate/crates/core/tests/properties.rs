mod common;

use proptest::prelude::*;
use sparsegroup::analytics::{
    gamma_even_gaps, is_limit_sparse, is_sparse, kappa, leap_profile, tail_is_double_leaps,
};
use sparsegroup::family::{halve_semigroup, reduce_to_limit};
use sparsegroup::{NumericalSemigroup, OutputRecord};

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2u32..24, 1..5)
        .prop_filter("gcd 1", |gens| gens.iter().fold(0, |a, &b| gcd(a, b)) == 1)
        .prop_map(|gens| NumericalSemigroup::from_generators(&gens).unwrap())
}

/// Sparse semigroups obtained by walking a random path in the genus tree.
fn sparse_semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(any::<bool>(), 1..28).prop_map(|steps| {
        let mut gaps = vec![1u32];
        for wide in steps {
            let next = gaps.last().unwrap() + if wide { 2 } else { 1 };
            let mut candidate = gaps.clone();
            candidate.push(next);
            if common::is_closed(&candidate) {
                gaps = candidate;
            }
        }
        NumericalSemigroup::from_gaps(&gaps).unwrap()
    })
}

proptest! {
    #[test]
    fn generators_match_sieve(gens in prop::collection::vec(2u32..24, 1..5)) {
        prop_assume!(gens.iter().fold(0, |a, &b| gcd(a, b)) == 1);
        let h = NumericalSemigroup::from_generators(&gens).unwrap();
        prop_assert_eq!(h.gaps(), &common::sieve_gaps(&gens)[..]);
    }

    #[test]
    fn minimal_generators_regenerate(h in semigroup()) {
        let gens = h.minimal_generators();
        prop_assert_eq!(NumericalSemigroup::from_generators(&gens).unwrap(), h.clone());
        prop_assert_eq!(gens[0], h.multiplicity());
    }

    #[test]
    fn basic_invariants(h in semigroup()) {
        let g = h.genus();
        if let Some(f) = h.frobenius() {
            prop_assert_eq!(h.conductor(), f + 1);
            prop_assert!(f < 2 * g);
            let k = kappa(&h).unwrap();
            prop_assert!((1..=g).contains(&k));
            prop_assert!(!h.contains(f as i64));
        }
        prop_assert!(h.contains(0));
        prop_assert!(!h.contains(-1));
        prop_assert_eq!(gamma_even_gaps(&h), halve_semigroup(&h).genus());
    }

    #[test]
    fn leap_counts_bounded(h in semigroup()) {
        prop_assume!(h.genus() > 0);
        let p = leap_profile(&h).unwrap();
        let g = h.genus();
        prop_assert!(p.single + p.double <= g - 1);
        prop_assert_eq!(p.single + p.double == g - 1, is_sparse(&h).unwrap());
    }

    #[test]
    fn sparse_leap_identities(h in sparse_semigroup()) {
        let p = leap_profile(&h).unwrap();
        let g = h.genus();
        prop_assert_eq!(p.single, p.kappa - 1);
        prop_assert_eq!(p.double, g - p.kappa);
        prop_assert_eq!(is_limit_sparse(&h).unwrap(), p.single == p.double);
        if g + 1 >= 2 * p.kappa {
            prop_assert!(tail_is_double_leaps(&h).unwrap());
            let reduced = reduce_to_limit(&h).unwrap();
            prop_assert!(is_limit_sparse(&reduced).unwrap());
            prop_assert_eq!(reduced.frobenius(), Some(3 * p.kappa - 2));
            prop_assert!(h.members_below(h.conductor()).all(|n| reduced.contains(n as i64)));
        }
    }

    #[test]
    fn json_round_trip(h in semigroup()) {
        let json = serde_json::to_string(&OutputRecord::new(&h)).unwrap();
        let back: OutputRecord = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(NumericalSemigroup::from_gaps(&back.gaps).unwrap(), h.clone());
        prop_assert_eq!(back, OutputRecord::new(&h));
        let direct: NumericalSemigroup = serde_json::from_str(&serde_json::to_string(&h).unwrap()).unwrap();
        prop_assert_eq!(direct, h);
    }
}
