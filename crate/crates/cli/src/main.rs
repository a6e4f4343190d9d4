mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use sparsegroup::record::ClassificationRecord;
use sparsegroup::verify::{theorem_ids, verify_with};
use sparsegroup::{
    Enumerator, Error, FamilySpec, Filter, NumericalSemigroup, OutputRecord, VerificationReport,
};

use output::{ClassifyRecord, Format, Writer};

const EXIT_PARSE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(name = "sparsegroup", version, about = "Analyze, enumerate and classify numerical semigroups")]
struct Cli {
    /// Worker threads for enumeration (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every descriptor of one semigroup.
    Analyze(AnalyzeArgs),
    /// Print the classification of one semigroup and every matching case.
    Classify(AnalyzeArgs),
    /// Stream all semigroups of one genus.
    Enumerate(EnumerateArgs),
    /// Build a member of a named family.
    Construct(ConstructArgs),
    /// Check registered results against exhaustive enumeration.
    Verify(VerifyArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["gaps", "gens"])))]
struct AnalyzeArgs {
    /// Gap list, comma separated and ascending (empty for ℕ).
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    gaps: Option<List>,
    /// Generators, comma separated.
    #[arg(long, value_parser = parse_list)]
    gens: Option<List>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FilterArg {
    All,
    Sparse,
    LimitSparse,
    Arf,
}

impl From<FilterArg> for Filter {
    fn from(f: FilterArg) -> Filter {
        match f {
            FilterArg::All => Filter::All,
            FilterArg::Sparse => Filter::Sparse,
            FilterArg::LimitSparse => Filter::LimitSparse,
            FilterArg::Arf => Filter::Arf,
        }
    }
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    genus: u32,
    #[arg(long, value_enum, default_value_t = FilterArg::All)]
    filter: FilterArg,
    /// Keep only semigroups with even Frobenius number.
    #[arg(long, conflicts_with = "odd_frobenius")]
    even_frobenius: bool,
    /// Keep only semigroups with odd Frobenius number.
    #[arg(long)]
    odd_frobenius: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Ordinary,
    Hyperordinary,
    Hyperelliptic,
    OddGeneratedLimit,
    Doubled,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, visible_alias = "g")]
    genus: Option<u32>,
    /// Multiplicity of a hyperordinary semigroup.
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    /// Gaps of the inner semigroup of a doubled semigroup.
    #[arg(long, value_parser = parse_list, allow_hyphen_values = true)]
    inner_gaps: Option<List>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
#[command(group(ArgGroup::new("which").required(true).args(["theorem", "all"])))]
struct VerifyArgs {
    /// Result identifier; repeatable.
    #[arg(long)]
    theorem: Vec<String>,
    /// Verify every registered result.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 20)]
    max_genus: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Debug)]
struct List(Vec<u32>);

fn parse_list(s: &str) -> Result<List, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(List(Vec::new()));
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("expected a non-negative integer, got {:?}", t.trim()))
        })
        .collect::<Result<_, _>>()
        .map(List)
}

enum Failure {
    Domain(Error),
    Verification,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_PARSE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot start {n} worker threads: {e}");
            return ExitCode::from(EXIT_RESOURCE);
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceLimit { .. } => EXIT_RESOURCE,
                _ => EXIT_DOMAIN,
            })
        }
        Err(Failure::Verification) => ExitCode::from(EXIT_VERIFY),
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let stdout = io::stdout().lock();
    match command {
        Command::Analyze(args) => {
            let h = input(&args)?;
            let mut w = Writer::records(args.format, stdout)?;
            w.record(&OutputRecord::new(&h))?;
            w.finish()?;
        }
        Command::Classify(args) => {
            let h = input(&args)?;
            let mut w = Writer::classifications(args.format, stdout)?;
            w.classification(&ClassifyRecord::new(&h))?;
            w.finish()?;
        }
        Command::Enumerate(args) => enumerate(args, stdout)?,
        Command::Construct(args) => {
            let h = family(&args)?.construct()?;
            let mut w = Writer::records(args.format, stdout)?;
            w.record(&OutputRecord::new(&h))?;
            w.finish()?;
        }
        Command::Verify(args) => verify(args, stdout)?,
    }
    Ok(())
}

fn input(args: &AnalyzeArgs) -> Result<NumericalSemigroup, Error> {
    match (&args.gaps, &args.gens) {
        (Some(List(gaps)), _) => NumericalSemigroup::from_gaps(gaps),
        (_, Some(List(gens))) => NumericalSemigroup::from_generators(gens),
        (None, None) => unreachable!("clap requires one input"),
    }
}

fn family(args: &ConstructArgs) -> Result<FamilySpec, Error> {
    fn need(v: Option<u32>, flag: &str, family: &str) -> Result<u32, Error> {
        v.ok_or_else(|| Error::InvalidFamilyParams(format!("{family} needs --{flag}")))
    }
    Ok(match args.family {
        FamilyArg::Ordinary => FamilySpec::Ordinary {
            genus: need(args.genus, "genus", "ordinary")?,
        },
        FamilyArg::Hyperordinary => FamilySpec::Hyperordinary {
            multiplicity: need(args.m, "m", "hyperordinary")?,
            g: need(args.genus, "g", "hyperordinary")?,
        },
        FamilyArg::Hyperelliptic => FamilySpec::Hyperelliptic {
            genus: need(args.genus, "genus", "hyperelliptic")?,
        },
        FamilyArg::OddGeneratedLimit => FamilySpec::OddGeneratedLimit {
            r: need(args.r, "r", "odd-generated-limit")?,
        },
        FamilyArg::Doubled => {
            let gaps = args.inner_gaps.as_ref().ok_or_else(|| {
                Error::InvalidFamilyParams("doubled needs --inner-gaps".into())
            })?;
            let inner = NumericalSemigroup::from_gaps(&gaps.0)?;
            FamilySpec::Doubled {
                genus: need(args.genus, "genus", "doubled")?,
                r: args.r.unwrap_or(inner.genus()),
                inner,
            }
        }
    })
}

fn enumerate(args: EnumerateArgs, out: impl Write) -> Result<(), Failure> {
    let enumerator = Enumerator::from_env()?;
    let parity = match (args.even_frobenius, args.odd_frobenius) {
        (true, _) => Some(0),
        (_, true) => Some(1),
        _ => None,
    };
    let keep = |h: &NumericalSemigroup| match parity {
        Some(p) => h.frobenius().is_some_and(|f| f % 2 == p),
        None => true,
    };
    let mut w = Writer::records(args.format, out)?;
    enumerator.par_stream(args.genus, args.filter.into(), |batch| {
        let records: Vec<OutputRecord> = batch
            .par_iter()
            .filter(|h| keep(h))
            .map(OutputRecord::new)
            .collect();
        records
            .iter()
            .try_for_each(|r| w.record(r))
            .map_err(Failure::Io)
    })?;
    w.finish()?;
    Ok(())
}

fn verify(args: VerifyArgs, out: impl Write) -> Result<(), Failure> {
    let enumerator = Enumerator::from_env()?;
    let ids: Vec<String> = if args.all {
        theorem_ids().map(str::to_string).collect()
    } else {
        args.theorem.clone()
    };
    // Reject unknown identifiers before any long run starts.
    for id in &ids {
        if !theorem_ids().any(|known| known == id) {
            return Err(Error::UnknownTheorem(id.clone()).into());
        }
    }
    let mut w = Writer::reports(args.format, out)?;
    let mut all_passed = true;
    for id in &ids {
        let report: VerificationReport = verify_with(&enumerator, id, args.max_genus)?;
        all_passed &= report.passed();
        w.report(&report)?;
    }
    w.finish()?;
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

pub(crate) fn classification_line(c: &ClassificationRecord) -> String {
    let mut s = c.theorem.as_str().to_string();
    if let Some(k) = c.case_index {
        s.push_str(&format!(" case {k}"));
    }
    if let Some(r) = c.r {
        s.push_str(&format!(" r={r}"));
    }
    if let Some(f) = &c.family {
        s.push_str(&format!(" ({f})"));
    }
    s
}
