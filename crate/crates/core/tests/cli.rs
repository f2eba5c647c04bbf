use std::path::PathBuf;

use h1curves::cli::report::{
    CorpusDto, ErrorDocument, FamilyReportDto, H1ReportDto, OracleDto, Section6Dto, SemigroupDto,
};
use h1curves::cli::{run, EXIT_COMPUTATION, EXIT_OK, EXIT_USAGE};
use serde::de::DeserializeOwned;

fn corpus(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("corpus");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("h1curves").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json<T: DeserializeOwned>(args: &[&str]) -> (i32, T) {
    let (code, out, _) = call(args);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
}

#[test]
fn invariants_of_the_cusp_with_oracle() {
    let file = corpus("cusp.curve");
    let (code, r): (_, H1ReportDto) = json(&["invariants", &file, "--oracle", "--json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!((r.b0, r.b1, r.sum_mu_prime, r.h1_formula), (1, 0, 2, 2));
    assert_eq!(r.h1_oracle.unwrap().value, 2);
    assert_eq!(r.verdict.as_deref(), Some("agree"));
    assert_eq!(r.singularities.len(), 1);
    assert_eq!(r.singularities[0].point.x, "0/1");
}

#[test]
fn invariants_without_oracle_leave_verdict_empty() {
    let file = corpus("smooth_cubic.curve");
    let (code, r): (_, H1ReportDto) = json(&["invariants", &file, "--json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!((r.b1, r.h1_formula), (2, 2));
    assert!(r.h1_oracle.is_none() && r.verdict.is_none());
}

#[test]
fn text_output_mentions_h1() {
    let (code, out, err) = call(&["invariants", &corpus("nodal_cubic.curve")]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.contains("h1"), "{out}");
}

#[test]
fn oracle_subcommand() {
    let file = corpus("tacnode.curve");
    let (code, r): (_, OracleDto) = json(&["oracle", &file, "--json"]);
    assert_eq!(code, EXIT_OK);
    assert!(r.stabilized);
    assert_eq!(r.value, 3);
    let total: i64 = r.per_degree.iter().map(|d| d.increment).sum();
    assert_eq!(total, 3);
}

#[test]
fn monomial_curve_reports_semigroup() {
    let file = corpus("semigroup_345.curve");
    let (code, r): (_, SemigroupDto) = json(&["invariants", &file, "--json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(r.gaps, vec![1, 2]);
    assert_eq!(r.delta, 2);
    assert_eq!(r.mu_prime.value, 5);
}

#[test]
fn family_scan_is_seeded() {
    let file = corpus("families/nodal.family");
    let (code, a): (_, FamilyReportDto) = json(&["family", &file, "--seed", "7", "--json"]);
    assert_eq!(code, EXIT_OK);
    let (_, b): (_, FamilyReportDto) = json(&["family", &file, "--seed", "7", "--json"]);
    assert_eq!(a, b);
    assert_eq!(a.special_values, vec!["-2/1", "2/1"]);
    assert_eq!(a.h_f, 2);
    assert!(a.tame.unwrap().holds);
    assert!(a.semicontinuity.iter().all(|s| s.verdict == "holds"));
}

#[test]
fn surface_example() {
    let (code, r): (_, Section6Dto) = json(&["example-section6", "--json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!((r.h_f, r.h1_at_0), (0, Some(2)));
    assert_eq!(r.semicontinuity, "fails");
    assert!(!r.lci);
}

#[test]
fn corpus_passes() {
    let (code, r): (_, CorpusDto) = json(&["corpus", "--json"]);
    assert_eq!(code, EXIT_OK);
    assert!(r.all_ok);
    assert_eq!(r.entries.len(), 10);
    assert!(r.entries.iter().all(|e| e.status == "ok"));
}

#[test]
fn nonreduced_input_is_a_computation_error() {
    let file = corpus("nonreduced.curve");
    let (code, r): (_, ErrorDocument) = json(&["invariants", &file, "--json"]);
    assert_eq!(code, EXIT_COMPUTATION);
    assert_eq!(r.error.kind, "curve-not-reduced");
}

#[test]
fn usage_and_input_errors() {
    let (code, _, err) = call(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(!err.is_empty());
    let (code, _, _) = call(&["invariants", "/nonexistent/file.curve"]);
    assert_eq!(code, EXIT_USAGE);

    let dir = std::env::temp_dir().join(format!("h1curves-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.curve");
    std::fs::write(&bad, "ring: x, y\nfactor: x^2 + z\n").unwrap();
    let (code, r): (_, ErrorDocument) = json(&["invariants", bad.to_str().unwrap(), "--json"]);
    assert_eq!(code, EXIT_USAGE);
    assert_eq!(r.error.line, Some(2));
    assert!(r.error.column.is_some());
    std::fs::remove_dir_all(&dir).unwrap();
}
