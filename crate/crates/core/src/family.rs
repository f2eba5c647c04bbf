//! Fibers `f⁻¹(y)` of a map to the line: special values, the generic dimension `h_f`,
//! and lower semicontinuity of `y ↦ dim H¹(f⁻¹(y))`.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{factor_univariate, rat, squarefree_part, MultiPoly, Rational};
use crate::derham::{h1_dimension, mu_prime, GermKind};
use crate::error::{Error, Result};
use crate::groebner::{eliminate, groebner_basis, quotient_dimension, Ideal, MonomialOrder};
use crate::oracle::{truncated_h1, AlgebraPresentation};
use crate::topology::{betti_numbers, CurveSpec};

/// Degree bound used for oracle computations inside the built-in surface example.
pub const SURFACE_DEGREE_BOUND: u32 = 24;
const SAMPLES: usize = 3;
const SAMPLE_RANGE: i64 = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// `f ∈ ℚ[x, y]` on the plane.
    Plane,
    /// `f = u` on the surface `u²w₁ = v², u³w₂ = v³, w₁³ = w₂²` in `ℂ⁴`.
    Section6,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub f: MultiPoly,
    /// Whether the total space is a local complete intersection.
    pub lci: bool,
    /// Asserted tameness; enables the constancy check.
    pub tame: bool,
}

impl FamilySpec {
    pub fn plane(f: MultiPoly) -> Result<Self> {
        if f.nvars() != 2 || f.is_constant() {
            return Err(Error::DegenerateFamily("a plane family needs a nonconstant f(x, y)".into()));
        }
        Ok(FamilySpec { kind: FamilyKind::Plane, f, lci: true, tame: false })
    }

    pub fn with_tame(mut self, tame: bool) -> Self {
        self.tame = tame;
        self
    }

    pub fn section6() -> Self {
        let vars = MultiPoly::ring(&["u", "v", "w1", "w2"]);
        FamilySpec { kind: FamilyKind::Section6, f: MultiPoly::var(&vars, 0), lci: false, tame: false }
    }
}

/// Critical values of the family: rational ones explicitly, the rest as irreducible
/// polynomials in `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecialValues {
    pub rational: Vec<Rational>,
    pub irrational: Vec<MultiPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberRecord {
    pub y: Rational,
    pub reduced: bool,
    pub finite_singular: bool,
    pub b1: Option<usize>,
    /// Absent for non-reduced fibers.
    pub h1: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemicontinuityVerdict {
    Holds,
    Fails,
    Skipped,
}

impl SemicontinuityVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            SemicontinuityVerdict::Holds => "holds",
            SemicontinuityVerdict::Fails => "fails",
            SemicontinuityVerdict::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemicontinuityRecord {
    pub y: Rational,
    pub h1: Option<usize>,
    pub verdict: SemicontinuityVerdict,
}

/// Fiberwise checks for a family asserted tame: `h¹(y) = μ` and `b₁(f⁻¹(y)) = μ − μ^y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TameCheck {
    pub mu: usize,
    /// `(y, b1, μ^y)` at each analyzed fiber.
    pub fibers: Vec<(Rational, usize, usize)>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyReport {
    pub special_values: SpecialValues,
    pub h_f: usize,
    pub fibers: Vec<FiberRecord>,
    pub semicontinuity: Vec<SemicontinuityRecord>,
    pub lci: bool,
    pub tame: Option<TameCheck>,
}

pub fn special_values(fam: &FamilySpec) -> Result<SpecialValues> {
    if fam.kind == FamilyKind::Section6 {
        return Ok(SpecialValues { rational: vec![Rational::zero()], irrational: Vec::new() });
    }
    let f = &fam.f;
    let ring: Arc<[String]> = vec![f.vars()[0].clone(), f.vars()[1].clone(), "t".to_string()].into();
    let fe = f.embed(&ring, &[0, 1]);
    let t = MultiPoly::var(&ring, 2);
    let ideal = Ideal::new(&ring, [&fe - &t, fe.derivative(0), fe.derivative(1)]);
    let elim = eliminate(&ideal, &[2])?;
    let Some(g) = elim.generators().first() else {
        return Err(Error::DegenerateFamily("critical values fill the line".into()));
    };
    let mut out = SpecialValues { rational: Vec::new(), irrational: Vec::new() };
    if g.is_constant() {
        return Ok(out);
    }
    let t_ring = MultiPoly::ring(&["t"]);
    for (h, _) in factor_univariate(g)? {
        let hu = h.to_univariate(2).expect("eliminant is univariate in t");
        if hu.degree() == Some(1) {
            out.rational.push(-(&hu.coeffs()[0] / &hu.coeffs()[1]));
        } else {
            out.irrational.push(MultiPoly::from_univariate(&t_ring, 0, &hu));
        }
    }
    out.rational.sort();
    Ok(out)
}

fn surface_fiber(y: &Rational) -> Result<AlgebraPresentation> {
    let vars = MultiPoly::ring(&["v", "w1", "w2"]);
    let v = MultiPoly::var(&vars, 0);
    let w1 = MultiPoly::var(&vars, 1);
    let w2 = MultiPoly::var(&vars, 2);
    let y2 = y * y;
    let y3 = &y2 * y;
    let rels = vec![
        &w1.scale(&y2) - &v.pow(2),
        &w2.scale(&y3) - &v.pow(3),
        &w1.pow(3) - &w2.pow(2),
    ];
    AlgebraPresentation::new(&vars, rels, Some(vec![1, 2, 3]))
}

fn section6_fiber(y: &Rational) -> Result<FiberRecord> {
    if !y.is_zero() {
        let res = truncated_h1(&surface_fiber(y)?, SURFACE_DEGREE_BOUND)?;
        if !res.stabilized {
            return Err(Error::BudgetExceeded(format!("fiber at {y} did not stabilize")));
        }
        return Ok(FiberRecord { y: y.clone(), reduced: true, finite_singular: true, b1: None, h1: Some(res.value) });
    }
    // the reduced zero fiber is the plane cusp w1^3 = w2^2
    let vars = MultiPoly::ring(&["w1", "w2"]);
    let cusp = MultiPoly::from_int_terms(&vars, &[(1, &[3, 0]), (-1, &[0, 2])]);
    let b1 = betti_numbers(&CurveSpec::single(cusp.clone())?)?.b1;
    let germ = AlgebraPresentation::plane_curve(&cusp, Some(vec![2, 3]))?;
    let mu_p = mu_prime(GermKind::Other, None, &germ, SURFACE_DEGREE_BOUND)?;
    Ok(FiberRecord { y: y.clone(), reduced: true, finite_singular: true, b1: Some(b1), h1: Some(b1 + mu_p.value()) })
}

/// `dim H¹(f⁻¹(y))`, treating the fiber as one asserted-irreducible factor.
pub fn fiber_h1(fam: &FamilySpec, y: &Rational) -> Result<FiberRecord> {
    if fam.kind == FamilyKind::Section6 {
        return section6_fiber(y);
    }
    let f = &fam.f;
    let g = f - &MultiPoly::constant(f.vars(), y.clone());
    let reduced = squarefree_part(&g)?.total_degree() == g.total_degree();
    let crit = Ideal::new(f.vars(), [g.clone(), f.derivative(0), f.derivative(1)]);
    let finite_singular = quotient_dimension(&groebner_basis(&crit, &MonomialOrder::grevlex(2))?).is_finite();
    if !reduced {
        return Ok(FiberRecord { y: y.clone(), reduced, finite_singular, b1: None, h1: None });
    }
    let report = h1_dimension(&CurveSpec::single(g)?, false, 0)?;
    Ok(FiberRecord { y: y.clone(), reduced, finite_singular, b1: Some(report.b1()), h1: Some(report.h1_formula) })
}

/// Deterministic nonzero integer samples avoiding the rational special values.
pub fn sample_values(special: &[Rational], seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < SAMPLES {
        let v = rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE);
        let q = rat(v);
        if v == 0 || special.contains(&q) || !seen.insert(v) {
            continue;
        }
        out.push(q);
    }
    out
}

fn generic_fibers(fam: &FamilySpec, special: &[Rational], seed: u64) -> Result<(usize, Vec<FiberRecord>)> {
    let records: Vec<FiberRecord> =
        sample_values(special, seed).par_iter().map(|y| fiber_h1(fam, y)).collect::<Result<_>>()?;
    let values: BTreeSet<Option<usize>> = records.iter().map(|r| r.h1).collect();
    match values.into_iter().collect::<Vec<_>>().as_slice() {
        [Some(h)] => Ok((*h, records)),
        other => Err(Error::GenericSamplingInconsistent(format!("sampled fibers gave {other:?}"))),
    }
}

/// `h_f` from three sampled generic fibers.
pub fn generic_h1(fam: &FamilySpec, seed: u64) -> Result<usize> {
    let special = special_values(fam)?;
    Ok(generic_fibers(fam, &special.rational, seed)?.0)
}

fn tame_check(fam: &FamilySpec, fibers: &[FiberRecord]) -> Result<TameCheck> {
    let f = &fam.f;
    let jac = Ideal::new(f.vars(), [f.derivative(0), f.derivative(1)]);
    let mu = quotient_dimension(&groebner_basis(&jac, &MonomialOrder::grevlex(2))?)
        .dimension()
        .ok_or(Error::CriticalLocusNotFinite)?;
    let mut out = Vec::new();
    let mut holds = true;
    for r in fibers {
        let (Some(h1), Some(b1)) = (r.h1, r.b1) else {
            holds = false;
            continue;
        };
        let g = f - &MultiPoly::constant(f.vars(), r.y.clone());
        let mu_y = crate::singular::total_milnor_on_curve(&g)?;
        holds &= h1 == mu && b1 + mu_y == mu;
        out.push((r.y.clone(), b1, mu_y));
    }
    Ok(TameCheck { mu, fibers: out, holds })
}

/// Special values, `h_f`, fiber records and semicontinuity verdicts.
pub fn family_scan(fam: &FamilySpec, seed: u64) -> Result<FamilyReport> {
    let special = special_values(fam)?;
    let (h_f, generic) = generic_fibers(fam, &special.rational, seed)?;
    let special_fibers: Vec<FiberRecord> =
        special.rational.par_iter().map(|y| fiber_h1(fam, y)).collect::<Result<_>>()?;
    let semicontinuity = special_fibers
        .iter()
        .map(|r| SemicontinuityRecord {
            y: r.y.clone(),
            h1: r.h1,
            verdict: match r.h1 {
                None => SemicontinuityVerdict::Skipped,
                Some(h) if h <= h_f => SemicontinuityVerdict::Holds,
                Some(_) => SemicontinuityVerdict::Fails,
            },
        })
        .collect();
    let mut fibers = special_fibers;
    fibers.extend(generic);
    let tame = if fam.tame && fam.kind == FamilyKind::Plane { Some(tame_check(fam, &fibers)?) } else { None };
    Ok(FamilyReport { special_values: special, h_f, fibers, semicontinuity, lci: fam.lci, tame })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(t: &[(i64, &[u32])]) -> MultiPoly {
        MultiPoly::from_int_terms(&MultiPoly::ring(&["x", "y"]), t)
    }

    fn cusp_family() -> FamilySpec {
        FamilySpec::plane(poly(&[(1, &[0, 2]), (-1, &[3, 0])])).unwrap().with_tame(true)
    }

    #[test]
    fn special_values_of_examples() {
        assert_eq!(special_values(&cusp_family()).unwrap().rational, vec![Rational::zero()]);
        let broughton = FamilySpec::plane(poly(&[(1, &[1, 0]), (1, &[2, 1])])).unwrap();
        let s = special_values(&broughton).unwrap();
        assert!(s.rational.is_empty() && s.irrational.is_empty());
        assert_eq!(special_values(&FamilySpec::section6()).unwrap().rational, vec![Rational::zero()]);
        // y^2 - x^3 + 3x: critical values ±2
        let nodal = FamilySpec::plane(poly(&[(1, &[0, 2]), (-1, &[3, 0]), (3, &[1, 0])])).unwrap();
        assert_eq!(special_values(&nodal).unwrap().rational, vec![rat(-2), rat(2)]);
        // y^2 - x^3 + 2x: critical values are irrational
        let irr = FamilySpec::plane(poly(&[(1, &[0, 2]), (-1, &[3, 0]), (2, &[1, 0])])).unwrap();
        let s = special_values(&irr).unwrap();
        assert!(s.rational.is_empty());
        assert_eq!(s.irrational.len(), 1);
    }

    #[test]
    fn cusp_family_is_constant() {
        let fam = cusp_family();
        assert_eq!(fiber_h1(&fam, &rat(1)).unwrap().h1, Some(2));
        assert_eq!(fiber_h1(&fam, &rat(0)).unwrap().h1, Some(2));
        let report = family_scan(&fam, 7).unwrap();
        assert_eq!(report.h_f, 2);
        assert_eq!(report.semicontinuity[0].verdict, SemicontinuityVerdict::Holds);
        assert!(report.tame.unwrap().holds);
    }

    #[test]
    fn broughton_family() {
        let fam = FamilySpec::plane(poly(&[(1, &[1, 0]), (1, &[2, 1])])).unwrap();
        assert_eq!(generic_h1(&fam, 1).unwrap(), 1);
    }

    #[test]
    fn non_reduced_fiber_is_skipped() {
        let fam = FamilySpec::plane(poly(&[(1, &[2, 0])])).unwrap();
        let r = fiber_h1(&fam, &rat(0)).unwrap();
        assert!(!r.reduced && r.h1.is_none());
    }

    #[test]
    fn surface_example_fails_semicontinuity() {
        let report = family_scan(&FamilySpec::section6(), 0).unwrap();
        assert_eq!(report.h_f, 0);
        assert_eq!(report.fibers[0].h1, Some(2));
        assert_eq!(report.semicontinuity[0].verdict, SemicontinuityVerdict::Fails);
        assert!(!report.lci);
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(sample_values(&[], 3), sample_values(&[], 3));
        assert!(!sample_values(&[rat(1)], 3).contains(&rat(1)));
    }
}
