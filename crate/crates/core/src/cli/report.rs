//! Serializable report documents. Rationals are written as `"p/q"` strings and algebraic
//! coordinates as polynomials in the field generator `a`.

use serde::{Deserialize, Serialize};

use crate::algebra::{format_rational, upoly_to_string, NumberField};
use crate::derham::{H1Report, SingularityRecord};
use crate::error::Error;
use crate::family::{FamilyReport, FiberRecord, SemicontinuityRecord};
use crate::oracle::{OracleResult, SemigroupData};
use crate::singular::AlgebraicPoint;
use crate::topology::ComponentData;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointDto {
    /// `"rational"` or the minimal polynomial of `a`.
    pub field: String,
    pub x: String,
    pub y: String,
    pub orbit_size: usize,
}

fn field_name(k: &NumberField) -> String {
    if k.is_rationals() {
        "rational".into()
    } else {
        upoly_to_string(k.minpoly(), "a")
    }
}

impl From<&AlgebraicPoint> for PointDto {
    fn from(p: &AlgebraicPoint) -> Self {
        let show = |e: &crate::algebra::NumberFieldElement| match e.as_rational() {
            Some(q) => format_rational(&q),
            None => e.to_poly_string(),
        };
        PointDto { field: field_name(&p.field), x: show(&p.coords[0]), y: show(&p.coords[1]), orbit_size: p.orbit_size }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityDto {
    pub point: PointDto,
    pub mu: usize,
    pub branches: usize,
    pub delta: usize,
    pub mu_prime: usize,
}

impl From<&SingularityRecord> for SingularityDto {
    fn from(s: &SingularityRecord) -> Self {
        SingularityDto {
            point: PointDto::from(&s.point),
            mu: s.mu,
            branches: s.branches,
            delta: s.delta,
            mu_prime: s.mu_prime,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeIncrement {
    pub degree: u32,
    pub increment: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDto {
    pub degree_bound: u32,
    pub per_degree: Vec<DegreeIncrement>,
    pub value: usize,
    pub stabilized: bool,
    pub stabilization_window: usize,
}

impl From<&OracleResult> for OracleDto {
    fn from(r: &OracleResult) -> Self {
        OracleDto {
            degree_bound: r.degree_bound,
            per_degree: r.per_degree.iter().map(|&(degree, increment)| DegreeIncrement { degree, increment }).collect(),
            value: r.value,
            stabilized: r.stabilized,
            stabilization_window: r.stabilization_window,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentDto {
    pub degree: u32,
    pub genus: usize,
    pub punctures: usize,
}

impl From<&ComponentData> for ComponentDto {
    fn from(c: &ComponentData) -> Self {
        ComponentDto { degree: c.degree, genus: c.genus, punctures: c.punctures }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1ReportDto {
    pub b0: usize,
    pub b1: usize,
    pub chi: i64,
    pub components: Vec<ComponentDto>,
    pub singularities: Vec<SingularityDto>,
    pub sum_mu_prime: usize,
    pub h1_formula: usize,
    pub h1_oracle: Option<OracleDto>,
    pub verdict: Option<String>,
}

impl From<&H1Report> for H1ReportDto {
    fn from(r: &H1Report) -> Self {
        H1ReportDto {
            b0: r.b0(),
            b1: r.b1(),
            chi: r.chi(),
            components: r.topology.components.iter().map(ComponentDto::from).collect(),
            singularities: r.singularities.iter().map(SingularityDto::from).collect(),
            sum_mu_prime: r.sum_mu_prime,
            h1_formula: r.h1_formula,
            h1_oracle: r.h1_oracle.as_ref().map(OracleDto::from),
            verdict: r.verdict.map(|v| v.as_str().to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberDto {
    pub y: String,
    pub reduced: bool,
    pub finite_singular: bool,
    pub b1: Option<usize>,
    /// Absent for non-reduced fibers.
    pub h1: Option<usize>,
}

impl From<&FiberRecord> for FiberDto {
    fn from(f: &FiberRecord) -> Self {
        FiberDto { y: format_rational(&f.y), reduced: f.reduced, finite_singular: f.finite_singular, b1: f.b1, h1: f.h1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemicontinuityDto {
    pub y: String,
    pub h1: Option<usize>,
    pub verdict: String,
}

impl From<&SemicontinuityRecord> for SemicontinuityDto {
    fn from(s: &SemicontinuityRecord) -> Self {
        SemicontinuityDto { y: format_rational(&s.y), h1: s.h1, verdict: s.verdict.as_str().into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TameDto {
    pub mu: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReportDto {
    pub special_values: Vec<String>,
    /// Irreducible polynomials in `t` whose roots are irrational special values.
    pub irrational_special_values: Vec<String>,
    pub h_f: usize,
    pub fibers: Vec<FiberDto>,
    pub semicontinuity: Vec<SemicontinuityDto>,
    pub lci: bool,
    pub tame: Option<TameDto>,
}

impl From<&FamilyReport> for FamilyReportDto {
    fn from(r: &FamilyReport) -> Self {
        FamilyReportDto {
            special_values: r.special_values.rational.iter().map(format_rational).collect(),
            irrational_special_values: r.special_values.irrational.iter().map(|p| p.to_expr_string()).collect(),
            h_f: r.h_f,
            fibers: r.fibers.iter().map(FiberDto::from).collect(),
            semicontinuity: r.semicontinuity.iter().map(SemicontinuityDto::from).collect(),
            lci: r.lci,
            tame: r.tame.as_ref().map(|t| TameDto { mu: t.mu, holds: t.holds }),
        }
    }
}

/// Summary of the built-in surface example.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section6Dto {
    pub h_f: usize,
    pub h1_at_0: Option<usize>,
    pub semicontinuity: String,
    pub lci: bool,
    pub family: FamilyReportDto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupDto {
    pub generators: Vec<u32>,
    pub gaps: Vec<u32>,
    pub conductor: u32,
    pub delta: usize,
    pub toric_relations: Vec<String>,
    pub mu_prime: OracleDto,
}

impl SemigroupDto {
    pub fn new(s: &SemigroupData, mu_prime: &OracleResult) -> Self {
        SemigroupDto {
            generators: s.generators.clone(),
            gaps: s.gaps.clone(),
            conductor: s.conductor,
            delta: s.gaps.len(),
            toric_relations: s.toric_relations.iter().map(|p| p.to_expr_string()).collect(),
            mu_prime: OracleDto::from(mu_prime),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntryDto {
    pub name: String,
    pub expected_h1: usize,
    pub b1: Option<usize>,
    pub sum_mu_prime: Option<usize>,
    pub h1_formula: Option<usize>,
    pub h1_oracle: Option<usize>,
    pub stabilized: Option<bool>,
    pub verdict: Option<String>,
    /// `"ok"`, `"mismatch"` or `"error"`.
    pub status: String,
    pub error: Option<ErrorDto>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusDto {
    pub entries: Vec<CorpusEntryDto>,
    pub all_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorDto {
    pub kind: String,
    pub message: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
}

impl From<&Error> for ErrorDto {
    fn from(e: &Error) -> Self {
        let (line, column) = match e {
            Error::Syntax { line, column, .. } | Error::UnknownVariable { line, column, .. } => {
                (Some(*line), Some(*column))
            }
            Error::RingNotDeclared { line } | Error::ZeroFactor { line } => (Some(*line), None),
            _ => (None, None),
        };
        ErrorDto { kind: e.kind().into(), message: e.to_string(), line, column }
    }
}

/// Top-level wrapper for failures in JSON mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorDocument {
    pub error: ErrorDto,
}
