//! Classification of sparse semigroups into the known families.
//!
//! Small values of `κ = 2g − λ_g` admit finite (or one-parameter) lists of
//! sparse semigroups; limit sparse semigroups (`g = 2κ − 1`) are classified
//! by the parity of the Frobenius number and of the multiplicity.

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::analytics::{gamma_even_gaps, is_limit_sparse, is_sparse, kappa};
use crate::error::{Error, Result};
use crate::family::{construct, double_semigroup, halve_semigroup, FamilySpec};
use crate::semigroup::NumericalSemigroup;

/// The result a classification is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Theorem {
    /// `λ_g = 2g − 1`: the hyperelliptic semigroup.
    Sym,
    /// `λ_g = 2g − 2`: `⟨3,4,5⟩` or `⟨3,5,7⟩`.
    QuasiSym,
    /// `λ_g = 2g − 3`, three cases.
    Odd3,
    /// `λ_g = 2g − 4`, six cases.
    Even4,
    /// `λ_g = 2g − 5`, ten cases.
    Odd5,
    /// Limit sparse with even Frobenius number: `3ℕ + H_{6r−2}`.
    LimitEven,
    /// Limit sparse, odd Frobenius number, even multiplicity: `2H′ ∪ H_{6r+1}`.
    LimitOddEvenMult,
    /// Limit sparse, odd Frobenius number, odd multiplicity.
    LimitOddOddMult,
    Unclassified,
}

impl Theorem {
    pub fn as_str(&self) -> &'static str {
        match self {
            Theorem::Sym => "SYM",
            Theorem::QuasiSym => "QUASI_SYM",
            Theorem::Odd3 => "ODD3",
            Theorem::Even4 => "EVEN4",
            Theorem::Odd5 => "ODD5",
            Theorem::LimitEven => "LIMIT_EVEN",
            Theorem::LimitOddEvenMult => "LIMIT_ODD_EVEN_MULT",
            Theorem::LimitOddOddMult => "LIMIT_ODD_ODD_MULT",
            Theorem::Unclassified => "UNCLASSIFIED",
        }
    }

    /// The value of `κ` the small-κ lists are stated for.
    fn kappa(&self) -> Option<u32> {
        match self {
            Theorem::Sym => Some(1),
            Theorem::QuasiSym => Some(2),
            Theorem::Odd3 => Some(3),
            Theorem::Even4 => Some(4),
            Theorem::Odd5 => Some(5),
            _ => None,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which family a sparse semigroup belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationTag {
    pub theorem: Theorem,
    /// 1-based index into the theorem's list of cases.
    pub case_index: Option<u32>,
    pub r: Option<u32>,
    /// Number of even gaps.
    pub gamma: u32,
    /// The halved semigroup `{m : 2m ∈ H}` when `H = 2H′ ∪ H_{2g−2r−1}`
    /// with `g ≥ 4r + 1`; doubling it reproduces `H`.
    pub inner: Option<NumericalSemigroup>,
}

impl ClassificationTag {
    fn unclassified(h: &NumericalSemigroup) -> Self {
        ClassificationTag {
            theorem: Theorem::Unclassified,
            case_index: None,
            r: None,
            gamma: gamma_even_gaps(h),
            inner: None,
        }
    }

    fn matched(h: &NumericalSemigroup, theorem: Theorem, case_index: u32) -> Self {
        let k = kappa(h).expect("classified semigroups have positive genus");
        ClassificationTag {
            theorem,
            case_index: Some(case_index),
            r: Some(k / 2),
            gamma: gamma_even_gaps(h),
            inner: doubling_inner(h),
        }
    }

    pub fn is_classified(&self) -> bool {
        self.theorem != Theorem::Unclassified
    }

    /// Human-readable family name, e.g. `3N + H_10`.
    pub fn family_name(&self, h: &NumericalSemigroup) -> Option<String> {
        let case = self.case_index?;
        let g = h.genus();
        let r = self.r.unwrap_or(0);
        let name = match (self.theorem, case) {
            (Theorem::Sym, _) => format!("<2, {}>", 2 * g + 1),
            (Theorem::QuasiSym, 1) => "<3, 4, 5>".into(),
            (Theorem::QuasiSym, _) => "<3, 5, 7>".into(),
            (Theorem::Odd3, 3) => format!("2(N \\ {{1}}) ∪ H_{}", 2 * g - 3),
            (Theorem::Odd5, 3) => format!("2(N \\ {{1, 3}}) ∪ H_{}", 2 * g - 5),
            (Theorem::Odd5, 10) => format!("2(N \\ {{1, 2}}) ∪ H_{}", 2 * g - 5),
            (Theorem::Odd3 | Theorem::Even4 | Theorem::Odd5, _) => {
                FIXED_NAMES
                    .iter()
                    .find(|(t, c, _)| *t == self.theorem && *c == case)
                    .map(|(_, _, n)| n.to_string())?
            }
            (Theorem::LimitEven, _) => format!("3N + H_{}", 6 * r - 2),
            (Theorem::LimitOddEvenMult, _) => {
                let inner = self.inner.as_ref()?;
                if inner.genus() == 0 {
                    format!("2N ∪ H_{}", 6 * r + 1)
                } else {
                    format!("2(N \\ {{{}}}) ∪ H_{}", join(inner.gaps()), 6 * r + 1)
                }
            }
            (Theorem::LimitOddOddMult, 1) => format!("3N + H_{}", 6 * r + 1),
            (Theorem::LimitOddOddMult, _) => {
                let gens: Vec<u32> = (r..2 * r).map(|j| 2 * j + 1).collect();
                format!("<{}> ∪ H_{}", join(&gens), 6 * r + 1)
            }
            (Theorem::Unclassified, _) => return None,
        };
        Some(name)
    }
}

fn join(items: &[u32]) -> String {
    items
        .iter()
        .map(|n| n.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

const FIXED_NAMES: &[(Theorem, u32, &str)] = &[
    (Theorem::Odd3, 1, "3N + H_5"),
    (Theorem::Odd3, 2, "3N + H_7"),
    (Theorem::Even4, 1, "3N + H_8"),
    (Theorem::Even4, 2, "3N + H_10"),
    (Theorem::Even4, 3, "4N + H_6"),
    (Theorem::Even4, 4, "H_4"),
    (Theorem::Even4, 5, "5N + H_6"),
    (Theorem::Even4, 6, "{0, 5, 7} ∪ H_8"),
    (Theorem::Odd5, 1, "3N + H_11"),
    (Theorem::Odd5, 2, "3N + H_13"),
    (Theorem::Odd5, 4, "{0, 5, 7} ∪ H_9"),
    (Theorem::Odd5, 5, "{0, 5, 7, 10} ∪ H_11"),
    (Theorem::Odd5, 6, "{0, 5, 7, 10, 12} ∪ H_13"),
    (Theorem::Odd5, 7, "{0, 5} ∪ H_7"),
    (Theorem::Odd5, 8, "{0, 5, 8} ∪ H_9"),
    (Theorem::Odd5, 9, "{0, 5, 8, 10} ∪ H_11"),
];

/// Selects a list of semigroups asserted by one of the results.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogId {
    Sym,
    QuasiSym,
    Odd3,
    Even4,
    Odd5,
    LimitEven { r: u32 },
    LimitOddOddMult { r: u32 },
}

impl CatalogId {
    pub fn theorem(&self) -> Theorem {
        match self {
            CatalogId::Sym => Theorem::Sym,
            CatalogId::QuasiSym => Theorem::QuasiSym,
            CatalogId::Odd3 => Theorem::Odd3,
            CatalogId::Even4 => Theorem::Even4,
            CatalogId::Odd5 => Theorem::Odd5,
            CatalogId::LimitEven { .. } => Theorem::LimitEven,
            CatalogId::LimitOddOddMult { .. } => Theorem::LimitOddOddMult,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub case_index: u32,
    pub semigroup: NumericalSemigroup,
}

fn hyperordinary(m: u32, g: u32) -> NumericalSemigroup {
    construct(&FamilySpec::Hyperordinary { multiplicity: m, g })
        .expect("catalog parameters are valid")
}

/// `{0} ∪ small ∪ H_tail`, i.e. members `small` below the tail `n > tail`.
fn members_then_ordinary(small: &[u32], tail: u32) -> NumericalSemigroup {
    let gaps: Vec<u32> = (1..=tail).filter(|n| !small.contains(n)).collect();
    NumericalSemigroup::from_gaps(&gaps).expect("catalog entries are semigroups")
}

/// `2(ℕ \ inner_gaps) ∪ H_tail`.
fn doubled_then_ordinary(inner_gaps: &[u32], tail: u32) -> NumericalSemigroup {
    let gaps: Vec<u32> = (1..=tail)
        .filter(|&n| n % 2 == 1 || inner_gaps.contains(&(n / 2)))
        .collect();
    NumericalSemigroup::from_gaps(&gaps).expect("catalog entries are semigroups")
}

/// Smallest genus at which a parametric case exists.
fn parametric_min_genus(theorem: Theorem, case: u32) -> Option<u32> {
    match (theorem, case) {
        (Theorem::Sym, 1) => Some(1),
        (Theorem::Odd3, 3) => Some(3),
        (Theorem::Odd5, 3) => Some(6),
        (Theorem::Odd5, 10) => Some(5),
        _ => None,
    }
}

fn parametric_instance(theorem: Theorem, case: u32, g: u32) -> NumericalSemigroup {
    match (theorem, case) {
        (Theorem::Sym, _) => construct(&FamilySpec::Hyperelliptic { genus: g }).unwrap(),
        (Theorem::Odd3, _) => doubled_then_ordinary(&[1], 2 * g - 2),
        (Theorem::Odd5, 3) => doubled_then_ordinary(&[1, 3], 2 * g - 4),
        (Theorem::Odd5, _) => doubled_then_ordinary(&[1, 2], 2 * g - 4),
        _ => unreachable!("not a parametric case"),
    }
}

fn fixed_cases(theorem: Theorem) -> Vec<(u32, NumericalSemigroup)> {
    match theorem {
        Theorem::QuasiSym => vec![
            (1, NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap()),
            (2, NumericalSemigroup::from_generators(&[3, 5, 7]).unwrap()),
        ],
        Theorem::Odd3 => vec![(1, hyperordinary(3, 5)), (2, hyperordinary(3, 7))],
        Theorem::Even4 => vec![
            (1, hyperordinary(3, 8)),
            (2, hyperordinary(3, 10)),
            (3, hyperordinary(4, 6)),
            (4, NumericalSemigroup::ordinary(4)),
            (5, hyperordinary(5, 6)),
            (6, members_then_ordinary(&[5, 7], 8)),
        ],
        Theorem::Odd5 => vec![
            (1, hyperordinary(3, 11)),
            (2, hyperordinary(3, 13)),
            (4, members_then_ordinary(&[5, 7], 9)),
            (5, members_then_ordinary(&[5, 7, 10], 11)),
            (6, members_then_ordinary(&[5, 7, 10, 12], 13)),
            (7, members_then_ordinary(&[5], 7)),
            (8, members_then_ordinary(&[5, 8], 9)),
            (9, members_then_ordinary(&[5, 8, 10], 11)),
        ],
        _ => Vec::new(),
    }
}

fn parametric_cases(theorem: Theorem) -> &'static [u32] {
    match theorem {
        Theorem::Sym => &[1],
        Theorem::Odd3 => &[3],
        Theorem::Odd5 => &[3, 10],
        _ => &[],
    }
}

/// Every semigroup asserted by a result, ordered by case index.
///
/// Parametric cases are instantiated for each genus in `genus_range`
/// (clamped below by the case's minimal genus); without a range only the
/// minimal instance is returned.
pub fn catalog(id: CatalogId, genus_range: Option<RangeInclusive<u32>>) -> Result<Vec<CatalogEntry>> {
    let entry = |case_index, semigroup| CatalogEntry {
        case_index,
        semigroup,
    };
    match id {
        CatalogId::LimitEven { r } => {
            if r == 0 {
                return Err(Error::InvalidFamilyParams("LIMIT_EVEN needs r ≥ 1".into()));
            }
            Ok(vec![entry(1, hyperordinary(3, 6 * r - 2))])
        }
        CatalogId::LimitOddOddMult { r } => {
            if r == 0 {
                return Err(Error::InvalidFamilyParams(
                    "LIMIT_ODD_ODD_MULT needs r ≥ 1".into(),
                ));
            }
            let mut out = vec![entry(1, hyperordinary(3, 6 * r + 1))];
            if r > 1 {
                out.push(entry(2, construct(&FamilySpec::OddGeneratedLimit { r })?));
            }
            Ok(out)
        }
        _ => {
            let theorem = id.theorem();
            let mut out: Vec<CatalogEntry> = fixed_cases(theorem)
                .into_iter()
                .map(|(c, s)| entry(c, s))
                .collect();
            for &case in parametric_cases(theorem) {
                let min = parametric_min_genus(theorem, case).unwrap();
                let range = match &genus_range {
                    Some(r) => (*r.start()).max(min)..=*r.end(),
                    None => min..=min,
                };
                out.extend(range.map(|g| entry(case, parametric_instance(theorem, case, g))));
            }
            out.sort_by_key(|e| (e.case_index, e.semigroup.genus()));
            Ok(out)
        }
    }
}

/// Halved semigroup when `H = 2H′ ∪ H_{2g−2r−1}` and the doubling
/// preconditions hold.
fn doubling_inner(h: &NumericalSemigroup) -> Option<NumericalSemigroup> {
    let f = h.frobenius()?;
    if f % 2 == 0 || h.small_members().any(|n| n % 2 == 1) {
        return None;
    }
    let r = (2 * h.genus() - f) / 2;
    let inner = halve_semigroup(h);
    match double_semigroup(&inner, h.genus(), r) {
        Ok(back) if back == *h => Some(inner),
        _ => None,
    }
}

/// Matches `h` against the finite list for its value of `κ ≤ 5`.
fn small_kappa_match(h: &NumericalSemigroup) -> Option<ClassificationTag> {
    let k = kappa(h).ok()?;
    let theorem = [
        Theorem::Sym,
        Theorem::QuasiSym,
        Theorem::Odd3,
        Theorem::Even4,
        Theorem::Odd5,
    ]
    .into_iter()
    .find(|t| t.kappa() == Some(k))?;
    let id = match theorem {
        Theorem::Sym => CatalogId::Sym,
        Theorem::QuasiSym => CatalogId::QuasiSym,
        Theorem::Odd3 => CatalogId::Odd3,
        Theorem::Even4 => CatalogId::Even4,
        _ => CatalogId::Odd5,
    };
    let g = h.genus();
    catalog(id, Some(g..=g))
        .ok()?
        .into_iter()
        .find(|e| e.semigroup == *h)
        .map(|e| ClassificationTag::matched(h, theorem, e.case_index))
}

/// Classifies a limit sparse semigroup by the parity of its Frobenius
/// number and multiplicity.
///
/// Returns an `Unclassified` tag if `h` fits none of the three families.
pub fn classify_limit_sparse(h: &NumericalSemigroup) -> Result<ClassificationTag> {
    if !is_limit_sparse(h)? {
        return Err(Error::NotApplicable("not a limit sparse semigroup".into()));
    }
    let f = h.frobenius().unwrap();
    let k = kappa(h)?;
    let r = k / 2;
    let tag = |theorem, case| ClassificationTag::matched(h, theorem, case);
    if f % 2 == 0 {
        if *h == hyperordinary(3, 6 * r - 2) {
            return Ok(tag(Theorem::LimitEven, 1));
        }
    } else if h.multiplicity() % 2 == 0 {
        let t = tag(Theorem::LimitOddEvenMult, 1);
        if t.inner.as_ref().is_some_and(|i| i.genus() == r) {
            return Ok(t);
        }
    } else {
        for e in catalog(CatalogId::LimitOddOddMult { r }, None)? {
            if e.semigroup == *h {
                return Ok(tag(Theorem::LimitOddOddMult, e.case_index));
            }
        }
    }
    Ok(ClassificationTag::unclassified(h))
}

/// Every family `h` belongs to, most specific first.
pub fn classify_all(h: &NumericalSemigroup) -> Result<Vec<ClassificationTag>> {
    require_classifiable(h)?;
    let mut out = Vec::new();
    if let Some(t) = small_kappa_match(h) {
        out.push(t);
    }
    if is_limit_sparse(h)? {
        let t = classify_limit_sparse(h)?;
        if t.is_classified() {
            out.push(t);
        }
    }
    Ok(out)
}

/// The first matching family in the order SYM, QUASI_SYM, ODD3, EVEN4, ODD5,
/// then the limit sparse results; `Unclassified` if none applies.
pub fn classify(h: &NumericalSemigroup) -> Result<ClassificationTag> {
    Ok(classify_all(h)?
        .into_iter()
        .next()
        .unwrap_or_else(|| ClassificationTag::unclassified(h)))
}

fn require_classifiable(h: &NumericalSemigroup) -> Result<()> {
    if h.genus() < 2 {
        return Err(Error::NotApplicable("classification needs genus ≥ 2".into()));
    }
    if !is_sparse(h)? {
        return Err(Error::NotApplicable("classification needs a sparse semigroup".into()));
    }
    Ok(())
}

/// Genus bounds for sparse semigroups, with `r = ⌊κ/2⌋`:
/// `g ≤ 4r − 1` for even `λ_g`; for odd `λ_g`, `g ≤ 4r + 1` unless every
/// member below `λ_g` is even.
pub fn check_genus_bounds(h: &NumericalSemigroup) -> Result<bool> {
    if !is_sparse(h)? {
        return Err(Error::NotApplicable("genus bounds need a sparse semigroup".into()));
    }
    let f = h.frobenius().unwrap();
    let g = h.genus();
    let r = kappa(h)? / 2;
    Ok(if f % 2 == 0 {
        g + 1 <= 4 * r
    } else {
        g <= 4 * r + 1 || h.small_members().all(|n| n % 2 == 0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaps(g: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_gaps(g).unwrap()
    }

    #[test]
    fn even4_case_three() {
        let t = classify(&gaps(&[1, 2, 3, 5, 6])).unwrap();
        assert_eq!(t.theorem, Theorem::Even4);
        assert_eq!(t.case_index, Some(3));
        assert_eq!(t.gamma, 2);
    }

    #[test]
    fn odd_generated_limit_matches_both_lists() {
        let h = gaps(&[1, 2, 3, 4, 6, 8, 9, 11, 13]);
        let all = classify_all(&h).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!((all[0].theorem, all[0].case_index), (Theorem::Odd5, Some(6)));
        assert_eq!(
            (all[1].theorem, all[1].case_index, all[1].r),
            (Theorem::LimitOddOddMult, Some(2), Some(2))
        );
        assert_eq!(classify(&h).unwrap(), all[0]);
    }

    #[test]
    fn doubled_limit_has_inner() {
        let h = gaps(&[1, 2, 3, 5, 7]);
        let t = classify_limit_sparse(&h).unwrap();
        assert_eq!(t.theorem, Theorem::LimitOddEvenMult);
        assert_eq!(t.r, Some(1));
        assert_eq!(t.inner, Some(gaps(&[1])));
        // κ = 3 puts it in the ODD3 list first
        let first = classify(&h).unwrap();
        assert_eq!((first.theorem, first.case_index), (Theorem::Odd3, Some(3)));
        assert_eq!(first.inner, Some(gaps(&[1])));
    }

    #[test]
    fn classification_preconditions() {
        assert!(matches!(classify(&gaps(&[1])), Err(Error::NotApplicable(_))));
        assert!(matches!(
            classify(&gaps(&[1, 2, 5])),
            Err(Error::NotApplicable(_))
        ));
        assert!(classify(&NumericalSemigroup::natural()).is_err());
        assert!(matches!(
            classify_limit_sparse(&NumericalSemigroup::ordinary(5)),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn catalogs() {
        let odd3 = catalog(CatalogId::Odd3, None).unwrap();
        let gap_lists: Vec<&[u32]> = odd3.iter().map(|e| e.semigroup.gaps()).collect();
        assert_eq!(gap_lists, vec![&[1, 2, 4, 5][..], &[1, 2, 4, 5, 7], &[1, 2, 3]]);

        let even4 = catalog(CatalogId::Even4, None).unwrap();
        let genera: Vec<u32> = even4.iter().map(|e| e.semigroup.genus()).collect();
        assert_eq!(genera, vec![6, 7, 5, 4, 5, 6]);

        let odd5 = catalog(CatalogId::Odd5, None).unwrap();
        assert_eq!(odd5.len(), 10);
        let odd5 = catalog(CatalogId::Odd5, Some(5..=8)).unwrap();
        assert_eq!(odd5.iter().filter(|e| e.case_index == 3).count(), 3);
        assert_eq!(odd5.iter().filter(|e| e.case_index == 10).count(), 4);

        let limit = catalog(CatalogId::LimitEven { r: 1 }, None).unwrap();
        assert_eq!(limit[0].semigroup.gaps(), &[1, 2, 4]);
        assert!(catalog(CatalogId::LimitEven { r: 0 }, None).is_err());
        assert_eq!(catalog(CatalogId::LimitOddOddMult { r: 1 }, None).unwrap().len(), 1);
    }

    #[test]
    fn catalog_entries_are_sparse_with_the_right_kappa() {
        for (id, k) in [
            (CatalogId::Sym, 1),
            (CatalogId::QuasiSym, 2),
            (CatalogId::Odd3, 3),
            (CatalogId::Even4, 4),
            (CatalogId::Odd5, 5),
        ] {
            for e in catalog(id, Some(1..=12)).unwrap() {
                assert!(is_sparse(&e.semigroup).unwrap(), "{:?}", e);
                assert_eq!(kappa(&e.semigroup).unwrap(), k, "{:?}", e);
                if e.semigroup.genus() < 2 {
                    continue;
                }
                let t = classify(&e.semigroup).unwrap();
                assert_eq!((t.theorem, t.case_index), (id.theorem(), Some(e.case_index)));
            }
        }
    }

    #[test]
    fn genus_bounds() {
        assert!(check_genus_bounds(&gaps(&[1, 2, 4, 5, 7, 8, 10])).unwrap());
        let doubled = double_semigroup(&gaps(&[1]), 9, 1).unwrap();
        assert!(doubled.genus() > 5);
        assert!(check_genus_bounds(&doubled).unwrap());
        assert!(check_genus_bounds(&NumericalSemigroup::ordinary(3)).unwrap());
        assert!(check_genus_bounds(&gaps(&[1, 2, 5])).is_err());
    }

    #[test]
    fn family_names() {
        let h = gaps(&[1, 2, 4, 5, 7, 8, 10]);
        let t = classify(&h).unwrap();
        assert_eq!(t.family_name(&h).unwrap(), "3N + H_10");
        let h = construct(&FamilySpec::OddGeneratedLimit { r: 3 }).unwrap();
        let t = classify(&h).unwrap();
        assert_eq!(t.theorem, Theorem::LimitOddOddMult);
        assert_eq!(t.family_name(&h).unwrap(), "<7, 9, 11> ∪ H_19");
        let h = gaps(&[1, 3, 5, 7]);
        assert_eq!(classify(&h).unwrap().family_name(&h).unwrap(), "<2, 9>");
        let h = gaps(&[1, 2, 3, 5, 7]);
        let t = classify_limit_sparse(&h).unwrap();
        assert_eq!(t.family_name(&h).unwrap(), "2(N \\ {1}) ∪ H_7");
        assert_eq!(classify(&h).unwrap().family_name(&h).unwrap(), "2(N \\ {1}) ∪ H_7");
    }
}
