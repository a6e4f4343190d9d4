//! Record, classification and report writers for the three output formats.
//!
//! JSON output is one object per line, so a stream of records can be
//! consumed incrementally.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use sparsegroup::classify::classify_all;
use sparsegroup::record::{symmetry_name, ClassificationRecord};
use sparsegroup::{analytics, NumericalSemigroup, OutputRecord, VerificationReport};

use crate::classification_line;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Output of the `classify` subcommand: the primary classification plus
/// every case the semigroup satisfies.
#[derive(Debug, Serialize)]
pub struct ClassifyRecord {
    pub gaps: Vec<u32>,
    pub genus: u32,
    pub frobenius: Option<u32>,
    pub kappa: Option<u32>,
    pub sparse: Option<bool>,
    pub limit_sparse: Option<bool>,
    pub classification: Option<ClassificationRecord>,
    pub matches: Vec<ClassificationRecord>,
}

impl ClassifyRecord {
    pub fn new(h: &NumericalSemigroup) -> Self {
        let full = OutputRecord::new(h);
        let matches = classify_all(h)
            .map(|tags| tags.iter().map(|t| ClassificationRecord::new(t, h)).collect())
            .unwrap_or_default();
        ClassifyRecord {
            gaps: full.gaps,
            genus: full.genus,
            frobenius: full.frobenius,
            kappa: analytics::kappa(h).ok(),
            sparse: full.sparse,
            limit_sparse: full.limit_sparse,
            classification: full.classification,
            matches,
        }
    }

    const CSV_HEADER: [&'static str; 8] = [
        "gaps",
        "genus",
        "frobenius",
        "kappa",
        "sparse",
        "limit_sparse",
        "classification",
        "matches",
    ];

    fn csv_row(&self) -> Vec<String> {
        vec![
            list(&self.gaps),
            self.genus.to_string(),
            opt(self.frobenius),
            opt(self.kappa),
            opt(self.sparse),
            opt(self.limit_sparse),
            opt(self.classification.as_ref().map(classification_line)),
            self.matches
                .iter()
                .map(classification_line)
                .collect::<Vec<_>>()
                .join("; "),
        ]
    }
}

const REPORT_HEADER: [&str; 7] = [
    "theorem_id",
    "genus_min",
    "genus_max",
    "checked",
    "failures",
    "elapsed_ms",
    "passed",
];

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn list(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn gap_set(v: &[u32]) -> String {
    format!("{{{}}}", list(v))
}

pub enum Writer<W: Write> {
    Json(W),
    Csv(csv::Writer<W>),
    Text(W),
}

impl<W: Write> Writer<W> {
    fn open(format: Format, out: W, header: &[&str]) -> io::Result<Self> {
        Ok(match format {
            Format::Json => Writer::Json(out),
            Format::Text => Writer::Text(out),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(header)?;
                Writer::Csv(w)
            }
        })
    }

    pub fn records(format: Format, out: W) -> io::Result<Self> {
        Self::open(format, out, &OutputRecord::CSV_HEADER)
    }

    pub fn classifications(format: Format, out: W) -> io::Result<Self> {
        Self::open(format, out, &ClassifyRecord::CSV_HEADER)
    }

    pub fn reports(format: Format, out: W) -> io::Result<Self> {
        Self::open(format, out, &REPORT_HEADER)
    }

    fn json<T: Serialize>(out: &mut W, value: &T) -> io::Result<()> {
        serde_json::to_writer(&mut *out, value)?;
        out.write_all(b"\n")
    }

    pub fn record(&mut self, r: &OutputRecord) -> io::Result<()> {
        match self {
            Writer::Json(out) => Self::json(out, r),
            Writer::Csv(w) => Ok(w.write_record(r.csv_row())?),
            Writer::Text(out) => writeln!(out, "{}", record_text(r)),
        }
    }

    pub fn classification(&mut self, c: &ClassifyRecord) -> io::Result<()> {
        match self {
            Writer::Json(out) => Self::json(out, c),
            Writer::Csv(w) => Ok(w.write_record(c.csv_row())?),
            Writer::Text(out) => {
                writeln!(out, "gaps {}", gap_set(&c.gaps))?;
                match &c.classification {
                    Some(primary) => writeln!(out, "classification: {}", classification_line(primary))?,
                    None => writeln!(out, "classification: none")?,
                }
                for m in &c.matches {
                    writeln!(out, "  matches {}", classification_line(m))?;
                }
                Ok(())
            }
        }
    }

    pub fn report(&mut self, r: &VerificationReport) -> io::Result<()> {
        match self {
            Writer::Json(out) => Self::json(out, r),
            Writer::Csv(w) => Ok(w.write_record([
                r.theorem_id.clone(),
                r.genus_range.0.to_string(),
                r.genus_range.1.to_string(),
                r.checked.to_string(),
                r.failures.len().to_string(),
                r.elapsed_ms.to_string(),
                r.passed().to_string(),
            ])?),
            Writer::Text(out) => {
                writeln!(
                    out,
                    "{} {}: genus {}..={}, checked {}, {} ms",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.theorem_id,
                    r.genus_range.0,
                    r.genus_range.1,
                    r.checked,
                    r.elapsed_ms
                )?;
                for f in &r.failures {
                    writeln!(out, "  counterexample {}", gap_set(f))?;
                }
                Ok(())
            }
        }
    }

    pub fn finish(self) -> io::Result<()> {
        match self {
            Writer::Json(mut out) | Writer::Text(mut out) => out.flush(),
            Writer::Csv(mut w) => w.flush(),
        }
    }
}

fn record_text(r: &OutputRecord) -> String {
    let mut parts = vec![
        gap_set(&r.gaps),
        format!("g={}", r.genus),
        format!("F={}", opt(r.frobenius)),
        format!("m={}", r.multiplicity),
        format!("gens={}", gap_set(&r.minimal_generators)),
    ];
    if let (Some(k), Some(s), Some(d)) = (r.kappa, r.single, r.double) {
        parts.push(format!("kappa={k} S={s} D={d}"));
    }
    let mut flags = Vec::new();
    if r.sparse == Some(true) {
        flags.push("sparse");
    }
    if r.limit_sparse == Some(true) {
        flags.push("limit-sparse");
    }
    if r.arf {
        flags.push("arf");
    }
    if r.negatively_graded == Some(true) {
        flags.push("negatively-graded");
    }
    if let Some(s) = r.symmetry_class {
        flags.push(symmetry_name(s));
    }
    if !flags.is_empty() {
        parts.push(flags.join(" "));
    }
    parts.push(format!("gamma={}", r.gamma_even_gaps));
    if let Some(c) = &r.classification {
        parts.push(classification_line(c));
    }
    parts.join("  ")
}
