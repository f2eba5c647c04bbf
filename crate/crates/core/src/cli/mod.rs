//! Command-line front end.

pub mod corpus;
pub mod parse;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::derham::{h1_dimension_weighted, Verdict};
use crate::error::Error;
use crate::family::{family_scan, FamilySpec, SemicontinuityVerdict, SURFACE_DEGREE_BOUND};
use crate::oracle::{semigroup_data, truncated_h1, truncated_mu_prime};
use parse::parse_curve_spec;
use report::{
    CorpusDto, ErrorDocument, ErrorDto, FamilyReportDto, H1ReportDto, OracleDto, Section6Dto, SemigroupDto,
};

pub use parse::{parse_polynomial, ParsedSpec, Tag};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTATION: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

pub const DEFAULT_DEGREE_BOUND: u32 = 24;

#[derive(Parser, Debug)]
#[command(name = "h1curves", version, about = "De Rham H^1 of affine plane curves and their fibers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Betti numbers, singularities and dim H^1 of a curve
    Invariants {
        file: PathBuf,
        /// Also run the truncated linear-algebra oracle
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
        degree_bound: u32,
        #[arg(long)]
        json: bool,
    },
    /// Truncated dim H^1 by linear algebra alone
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
        degree_bound: u32,
        #[arg(long)]
        json: bool,
    },
    /// Fibers of f: special values, h_f and semicontinuity
    Family {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// The non-lci surface whose zero fiber breaks semicontinuity
    #[command(name = "example-section6")]
    ExampleSection6 {
        #[arg(long)]
        json: bool,
    },
    /// Run the bundled golden corpus
    Corpus {
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
        degree_bound: u32,
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: i32,
    error: ErrorDto,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_input_error() { EXIT_USAGE } else { EXIT_COMPUTATION };
        Failure { code, error: ErrorDto::from(&e) }
    }
}

/// What a command produced: a document and whether verification succeeded.
struct Outcome {
    json: String,
    text: String,
    verified: bool,
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report documents serialize")
}

fn read_spec(path: &PathBuf) -> Result<ParsedSpec, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_USAGE,
        error: ErrorDto { kind: "usage".into(), message: format!("{}: {e}", path.display()), line: None, column: None },
    })?;
    Ok(parse_curve_spec(&text)?)
}

fn invariants(path: &PathBuf, oracle: bool, degree_bound: u32) -> Result<Outcome, Failure> {
    let parsed = read_spec(path)?;
    if parsed.factors.is_empty() {
        let s = semigroup_data(parsed.monomial_generators().unwrap_or(&[]))?;
        let r = truncated_mu_prime(&s.presentation()?, degree_bound)?;
        let dto = SemigroupDto::new(&s, &r);
        let text = format!(
            "semigroup <{}>\ngaps: {:?}\nconductor: {}\ndelta: {}\nmu': {} ({})\n",
            join(&s.generators),
            s.gaps,
            s.conductor,
            dto.delta,
            r.value,
            stab(r.stabilized)
        );
        return Ok(Outcome { json: to_json(&dto), text, verified: true });
    }
    let report = h1_dimension_weighted(&parsed.curve_spec()?, parsed.weights.clone(), oracle, degree_bound)?;
    let dto = H1ReportDto::from(&report);
    let mut text = format!("b0: {}\nb1: {}\nchi: {}\n", dto.b0, dto.b1, dto.chi);
    for s in &dto.singularities {
        let field = if s.point.field == "rational" { String::new() } else { format!(" over a: {} = 0", s.point.field) };
        text += &format!(
            "singular point ({}, {}){field} [orbit {}]: mu = {}, branches = {}, delta = {}, mu' = {}\n",
            s.point.x, s.point.y, s.point.orbit_size, s.mu, s.branches, s.delta, s.mu_prime
        );
    }
    text += &format!("sum mu': {}\nh1 (formula): {}\n", dto.sum_mu_prime, dto.h1_formula);
    if let Some(o) = &dto.h1_oracle {
        text += &format!("h1 (oracle, degree <= {}): {} ({})\n", o.degree_bound, o.value, stab(o.stabilized));
    }
    if let Some(v) = &dto.verdict {
        text += &format!("verdict: {v}\n");
    }
    let verified = report.verdict != Some(Verdict::Disagree);
    Ok(Outcome { json: to_json(&dto), text, verified })
}

fn oracle_only(path: &PathBuf, degree_bound: u32) -> Result<Outcome, Failure> {
    let parsed = read_spec(path)?;
    let r = truncated_h1(&parsed.presentation()?, degree_bound)?;
    let dto = OracleDto::from(&r);
    let mut text = String::new();
    for inc in dto.per_degree.iter().filter(|d| d.increment != 0) {
        text += &format!("degree {}: +{}\n", inc.degree, inc.increment);
    }
    text += &format!("h1 (degree <= {}): {} ({})\n", dto.degree_bound, dto.value, stab(dto.stabilized));
    Ok(Outcome { json: to_json(&dto), text, verified: true })
}

fn family_text(dto: &FamilyReportDto) -> String {
    let mut text = format!("special values: [{}]\n", dto.special_values.join(", "));
    if !dto.irrational_special_values.is_empty() {
        text += &format!("irrational special values: roots of {}\n", dto.irrational_special_values.join(", "));
    }
    text += &format!("h_f: {}\n", dto.h_f);
    for f in &dto.fibers {
        let h = f.h1.map_or("skipped (non-reduced)".to_string(), |h| h.to_string());
        text += &format!("fiber y = {}: h1 = {h}\n", f.y);
    }
    for s in &dto.semicontinuity {
        text += &format!("semicontinuity at {}: {}\n", s.y, s.verdict);
    }
    text += &format!("lci: {}\n", dto.lci);
    if let Some(t) = &dto.tame {
        text += &format!("tame check (mu = {}): {}\n", t.mu, if t.holds { "holds" } else { "fails" });
    }
    text
}

fn family(path: &PathBuf, seed: u64) -> Result<Outcome, Failure> {
    let parsed = read_spec(path)?;
    let report = family_scan(&parsed.family_spec()?, seed)?;
    let dto = FamilyReportDto::from(&report);
    // a failure on an lci total space with finite singular fibers contradicts the theory
    let verified = report.semicontinuity.iter().zip(&report.fibers).all(|(s, f)| {
        s.verdict != SemicontinuityVerdict::Fails || !(report.lci && f.finite_singular)
    }) && report.tame.as_ref().is_none_or(|t| t.holds);
    Ok(Outcome { text: family_text(&dto), json: to_json(&dto), verified })
}

fn section6() -> Result<Outcome, Failure> {
    let report = family_scan(&FamilySpec::section6(), 0)?;
    let family = FamilyReportDto::from(&report);
    let at0 = report.semicontinuity.first();
    let dto = Section6Dto {
        h_f: report.h_f,
        h1_at_0: at0.and_then(|s| s.h1),
        semicontinuity: at0.map_or("skipped", |s| s.verdict.as_str()).into(),
        lci: report.lci,
        family,
    };
    let verified = dto.h_f == 0 && dto.h1_at_0 == Some(2) && dto.semicontinuity == "fails" && !dto.lci;
    let text = format!(
        "h_f: {}\nh1 at 0: {}\nsemicontinuity: {}\nlci: {}\n(oracle degree bound {SURFACE_DEGREE_BOUND})\n",
        dto.h_f,
        dto.h1_at_0.map_or("-".into(), |h| h.to_string()),
        dto.semicontinuity,
        dto.lci
    );
    Ok(Outcome { json: to_json(&dto), text, verified })
}

fn corpus_outcome(degree_bound: u32) -> Outcome {
    let dto: CorpusDto = corpus::run_corpus(degree_bound);
    let mut text = String::new();
    for e in &dto.entries {
        let detail = match (&e.error, e.h1_formula, e.h1_oracle) {
            (Some(err), _, _) => format!("error: {}", err.message),
            (None, Some(f), Some(o)) => format!("formula {f}, oracle {o}, expected {}", e.expected_h1),
            _ => String::new(),
        };
        text += &format!("{:<16} {:<8} {detail}\n", e.name, e.status);
    }
    Outcome { verified: dto.all_ok, json: to_json(&dto), text }
}

fn join(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn stab(s: bool) -> &'static str {
    if s {
        "stabilized"
    } else {
        "not stabilized"
    }
}

/// Runs the CLI with explicit arguments and output streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let (json, result) = match &cli.command {
        Command::Invariants { file, oracle, degree_bound, json } => (*json, invariants(file, *oracle, *degree_bound)),
        Command::Oracle { file, degree_bound, json } => (*json, oracle_only(file, *degree_bound)),
        Command::Family { file, seed, json } => (*json, family(file, *seed)),
        Command::ExampleSection6 { json } => (*json, section6()),
        Command::Corpus { degree_bound, json } => (*json, Ok(corpus_outcome(*degree_bound))),
    };
    match result {
        Ok(o) => {
            let _ = writeln!(out, "{}", if json { o.json.trim_end() } else { o.text.trim_end() });
            if o.verified {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
        Err(f) => {
            if json {
                let _ = writeln!(out, "{}", to_json(&ErrorDocument { error: f.error }));
            } else {
                let _ = writeln!(err, "error: {}", f.error.message);
            }
            f.code
        }
    }
}
