//! Flat, serializable summary of a semigroup.

use serde::{Deserialize, Serialize};

use crate::analytics::{
    gamma_even_gaps, is_arf, is_limit_sparse, is_negatively_graded, is_sparse, leap_profile,
    symmetry_class, SymmetryClass,
};
use crate::classify::{classify, ClassificationTag, Theorem};
use crate::semigroup::NumericalSemigroup;

/// Classification fields of an [`OutputRecord`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub theorem: Theorem,
    pub case_index: Option<u32>,
    pub r: Option<u32>,
    pub inner_gaps: Option<Vec<u32>>,
    /// Family name such as `3N + H_10`.
    pub family: Option<String>,
}

impl ClassificationRecord {
    pub fn new(tag: &ClassificationTag, h: &NumericalSemigroup) -> Self {
        ClassificationRecord {
            family: tag.family_name(h),
            theorem: tag.theorem,
            case_index: tag.case_index,
            r: tag.r,
            inner_gaps: tag.inner.as_ref().map(|i| i.gaps().to_vec()),
        }
    }
}

/// Every descriptor of a semigroup. Quantities undefined at genus 0 (and
/// the classification, which needs a sparse semigroup of genus ≥ 2) are
/// `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub gaps: Vec<u32>,
    pub minimal_generators: Vec<u32>,
    pub genus: u32,
    pub frobenius: Option<u32>,
    pub conductor: u32,
    pub multiplicity: u32,
    pub kappa: Option<u32>,
    #[serde(rename = "S")]
    pub single: Option<u32>,
    #[serde(rename = "D")]
    pub double: Option<u32>,
    pub sparse: Option<bool>,
    pub limit_sparse: Option<bool>,
    pub arf: bool,
    pub gamma_even_gaps: u32,
    pub symmetry_class: Option<SymmetryClass>,
    pub negatively_graded: Option<bool>,
    pub classification: Option<ClassificationRecord>,
}

impl OutputRecord {
    pub fn new(h: &NumericalSemigroup) -> Self {
        let profile = leap_profile(h).ok();
        let classification = classify(h)
            .ok()
            .map(|tag| ClassificationRecord::new(&tag, h));
        OutputRecord {
            gaps: h.gaps().to_vec(),
            minimal_generators: h.minimal_generators(),
            genus: h.genus(),
            frobenius: h.frobenius(),
            conductor: h.conductor(),
            multiplicity: h.multiplicity(),
            kappa: profile.as_ref().map(|p| p.kappa),
            single: profile.as_ref().map(|p| p.single),
            double: profile.as_ref().map(|p| p.double),
            sparse: is_sparse(h).ok(),
            limit_sparse: is_limit_sparse(h).ok(),
            arf: is_arf(h),
            gamma_even_gaps: gamma_even_gaps(h),
            symmetry_class: symmetry_class(h).ok(),
            negatively_graded: is_negatively_graded(h).ok(),
            classification,
        }
    }

    /// CSV column names, in field order with classification flattened.
    pub const CSV_HEADER: [&'static str; 20] = [
        "gaps",
        "minimal_generators",
        "genus",
        "frobenius",
        "conductor",
        "multiplicity",
        "kappa",
        "S",
        "D",
        "sparse",
        "limit_sparse",
        "arf",
        "gamma_even_gaps",
        "symmetry_class",
        "negatively_graded",
        "classification_theorem",
        "classification_case_index",
        "classification_r",
        "classification_inner_gaps",
        "classification_family",
    ];

    /// Row matching [`OutputRecord::CSV_HEADER`]. Lists are comma-joined,
    /// absent values are empty.
    pub fn csv_row(&self) -> Vec<String> {
        fn opt<T: ToString>(v: Option<T>) -> String {
            v.map(|v| v.to_string()).unwrap_or_default()
        }
        fn list(v: &[u32]) -> String {
            v.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",")
        }
        let c = self.classification.as_ref();
        vec![
            list(&self.gaps),
            list(&self.minimal_generators),
            self.genus.to_string(),
            opt(self.frobenius),
            self.conductor.to_string(),
            self.multiplicity.to_string(),
            opt(self.kappa),
            opt(self.single),
            opt(self.double),
            opt(self.sparse),
            opt(self.limit_sparse),
            self.arf.to_string(),
            self.gamma_even_gaps.to_string(),
            opt(self.symmetry_class.map(symmetry_name)),
            opt(self.negatively_graded),
            opt(c.map(|c| c.theorem.as_str())),
            opt(c.and_then(|c| c.case_index)),
            opt(c.and_then(|c| c.r)),
            opt(c.and_then(|c| c.inner_gaps.as_deref().map(list))),
            opt(c.and_then(|c| c.family.clone())),
        ]
    }
}

pub fn symmetry_name(s: SymmetryClass) -> &'static str {
    match s {
        SymmetryClass::Symmetric => "SYMMETRIC",
        SymmetryClass::QuasiSymmetric => "QUASI_SYMMETRIC",
        SymmetryClass::Neither => "NEITHER",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields_are_consistent() {
        let h = NumericalSemigroup::from_gaps(&[1, 2, 4, 5]).unwrap();
        let rec = OutputRecord::new(&h);
        assert_eq!(rec.kappa, Some(2 * rec.genus - rec.frobenius.unwrap()));
        assert_eq!(rec.sparse, Some(true));
        assert!(rec.arf);
        let c = rec.classification.as_ref().unwrap();
        assert_eq!((c.theorem, c.case_index), (Theorem::Odd3, Some(1)));
        assert_eq!(c.family.as_deref(), Some("3N + H_5"));
        assert_eq!(rec.csv_row().len(), OutputRecord::CSV_HEADER.len());
    }

    #[test]
    fn natural_record() {
        let rec = OutputRecord::new(&NumericalSemigroup::natural());
        assert_eq!(rec.genus, 0);
        assert_eq!(rec.frobenius, None);
        assert_eq!(rec.sparse, None);
        assert_eq!(rec.classification, None);
        assert_eq!(rec.minimal_generators, vec![1]);
    }
}
