//! The bundled golden corpus of curves and families with their expected invariants.

use rayon::prelude::*;

use super::parse::parse_curve_spec;
use super::report::{CorpusDto, CorpusEntryDto, ErrorDto};
use crate::derham::{h1_dimension_weighted, H1Report, Verdict};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpectedCurve {
    pub b0: usize,
    pub b1: usize,
    pub sum_mu: usize,
    pub h1: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct CorpusCurve {
    pub name: &'static str,
    pub source: &'static str,
    pub expected: ExpectedCurve,
}

#[derive(Clone, Copy, Debug)]
pub struct CorpusFamily {
    pub name: &'static str,
    pub source: &'static str,
    pub special_values: &'static [i64],
    pub h_f: usize,
}

macro_rules! curve {
    ($name:literal, $b0:expr, $b1:expr, $mu:expr, $h1:expr) => {
        CorpusCurve {
            name: $name,
            source: include_str!(concat!("../../corpus/", $name, ".curve")),
            expected: ExpectedCurve { b0: $b0, b1: $b1, sum_mu: $mu, h1: $h1 },
        }
    };
}

macro_rules! family {
    ($name:literal, $special:expr, $h:expr) => {
        CorpusFamily {
            name: $name,
            source: include_str!(concat!("../../corpus/families/", $name, ".family")),
            special_values: $special,
            h_f: $h,
        }
    };
}

pub const CURVES: &[CorpusCurve] = &[
    curve!("line", 1, 0, 0, 0),
    curve!("parallel_lines", 2, 0, 0, 0),
    curve!("cross", 1, 0, 1, 1),
    curve!("circle", 1, 1, 0, 1),
    curve!("hyperbola", 1, 1, 0, 1),
    curve!("cusp", 1, 0, 2, 2),
    curve!("tacnode", 1, 0, 3, 3),
    curve!("nodal_cubic", 1, 1, 1, 2),
    curve!("three_lines", 1, 0, 4, 4),
    curve!("smooth_cubic", 1, 2, 0, 2),
];

pub const FAMILIES: &[CorpusFamily] = &[
    family!("cusp", &[0], 2),
    family!("nodal", &[-2, 2], 2),
    family!("a4", &[0], 4),
    family!("e6", &[0], 6),
    family!("broughton", &[], 1),
];

pub const NONREDUCED: &str = include_str!("../../corpus/nonreduced.curve");
pub const SEMIGROUP_345: &str = include_str!("../../corpus/semigroup_345.curve");

/// Formula and oracle for one corpus curve.
pub fn analyze(curve: &CorpusCurve, degree_bound: u32) -> Result<H1Report> {
    let parsed = parse_curve_spec(curve.source)?;
    h1_dimension_weighted(&parsed.curve_spec()?, parsed.weights.clone(), true, degree_bound)
}

fn entry(curve: &CorpusCurve, degree_bound: u32) -> CorpusEntryDto {
    let mut e = CorpusEntryDto {
        name: curve.name.into(),
        expected_h1: curve.expected.h1,
        b1: None,
        sum_mu_prime: None,
        h1_formula: None,
        h1_oracle: None,
        stabilized: None,
        verdict: None,
        status: "error".into(),
        error: None,
    };
    match analyze(curve, degree_bound) {
        Err(err) => e.error = Some(ErrorDto::from(&err)),
        Ok(r) => {
            let exp = curve.expected;
            let matches = r.b0() == exp.b0
                && r.b1() == exp.b1
                && r.sum_mu_prime == exp.sum_mu
                && r.h1_formula == exp.h1
                && r.verdict == Some(Verdict::Agree);
            e.b1 = Some(r.b1());
            e.sum_mu_prime = Some(r.sum_mu_prime);
            e.h1_formula = Some(r.h1_formula);
            e.h1_oracle = r.h1_oracle.as_ref().map(|o| o.value);
            e.stabilized = r.h1_oracle.as_ref().map(|o| o.stabilized);
            e.verdict = r.verdict.map(|v| v.as_str().into());
            e.status = if matches { "ok" } else { "mismatch" }.into();
        }
    }
    e
}

/// Runs every corpus curve; output order is the table order regardless of scheduling.
pub fn run_corpus(degree_bound: u32) -> CorpusDto {
    let entries: Vec<CorpusEntryDto> = CURVES.par_iter().map(|c| entry(c, degree_bound)).collect();
    let all_ok = entries.iter().all(|e| e.status == "ok");
    CorpusDto { entries, all_ok }
}
