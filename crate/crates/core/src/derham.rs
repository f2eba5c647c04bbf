//! Both sides of `dim H¹(C) = b₁(C) + Σ μ′(C, x)` and the comparison between them.

use crate::error::{Error, Result};
use crate::oracle::{truncated_h1, truncated_mu_prime, AlgebraPresentation, OracleResult};
use crate::singular::{local_invariants, singular_points, AlgebraicPoint};
use crate::topology::{betti_numbers, CurveSpec, TopologyReport};

/// Local data at one orbit of singular points of the full curve.
#[derive(Clone, Debug, PartialEq)]
pub struct SingularityRecord {
    pub point: AlgebraicPoint,
    pub mu: usize,
    pub branches: usize,
    pub delta: usize,
    pub mu_prime: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Agree,
    Disagree,
    OracleUnstable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Agree => "agree",
            Verdict::Disagree => "disagree",
            Verdict::OracleUnstable => "oracle-unstable",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct H1Report {
    pub topology: TopologyReport,
    pub singularities: Vec<SingularityRecord>,
    pub sum_mu_prime: usize,
    pub h1_formula: usize,
    pub h1_oracle: Option<OracleResult>,
    /// `None` when the oracle was not run.
    pub verdict: Option<Verdict>,
}

impl H1Report {
    pub fn b0(&self) -> usize {
        self.topology.b0
    }

    pub fn b1(&self) -> usize {
        self.topology.b1
    }

    pub fn chi(&self) -> i64 {
        self.topology.chi
    }
}

/// What is known about a germ, deciding whether `μ′ = μ` may be used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GermKind {
    PlaneCurve,
    CompleteIntersection,
    Other,
}

/// Where a value of `μ′` came from.
#[derive(Clone, Debug, PartialEq)]
pub enum MuPrime {
    Milnor(usize),
    Oracle(OracleResult),
}

impl MuPrime {
    pub fn value(&self) -> usize {
        match self {
            MuPrime::Milnor(v) => *v,
            MuPrime::Oracle(r) => r.value,
        }
    }
}

/// `μ′` of a germ at the origin: the Milnor number for plane and complete-intersection germs
/// with a known `μ`, the local oracle otherwise.
pub fn mu_prime(kind: GermKind, milnor: Option<usize>, germ: &AlgebraPresentation, degree_bound: u32) -> Result<MuPrime> {
    match (kind, milnor) {
        (GermKind::PlaneCurve | GermKind::CompleteIntersection, Some(mu)) => Ok(MuPrime::Milnor(mu)),
        _ => Ok(MuPrime::Oracle(truncated_mu_prime(germ, degree_bound)?)),
    }
}

/// Formula side, and the oracle side on request, with default weights.
pub fn h1_dimension(spec: &CurveSpec, with_oracle: bool, degree_bound: u32) -> Result<H1Report> {
    h1_dimension_weighted(spec, None, with_oracle, degree_bound)
}

/// As [`h1_dimension`], with variable weights for the oracle's filtration.
pub fn h1_dimension_weighted(
    spec: &CurveSpec,
    weights: Option<Vec<u32>>,
    with_oracle: bool,
    degree_bound: u32,
) -> Result<H1Report> {
    let topology = betti_numbers(spec)?;
    let f = spec.product();
    let mut singularities = Vec::new();
    for p in singular_points(f)? {
        let inv = local_invariants(f, &p)?;
        singularities.push(SingularityRecord {
            mu_prime: inv.mu,
            point: inv.point,
            mu: inv.mu,
            branches: inv.branches,
            delta: inv.delta,
        });
    }
    let sum_mu_prime = singularities.iter().map(|s| s.point.orbit_size * s.mu_prime).sum();
    let h1_formula = topology.b1 + sum_mu_prime;
    let (h1_oracle, verdict) = if with_oracle {
        let res = truncated_h1(&AlgebraPresentation::plane_curve(f, weights)?, degree_bound)?;
        let v = if !res.stabilized {
            Verdict::OracleUnstable
        } else if res.value == h1_formula {
            Verdict::Agree
        } else {
            Verdict::Disagree
        };
        (Some(res), Some(v))
    } else {
        (None, None)
    };
    Ok(H1Report { topology, singularities, sum_mu_prime, h1_formula, h1_oracle, verdict })
}

/// Whether the curve is a disjoint union of affine lines, i.e. `H¹ = 0`.
pub fn is_disjoint_lines(spec: &CurveSpec) -> Result<bool> {
    let report = h1_dimension(spec, false, 0)?;
    let t = &report.topology;
    let structural = report.singularities.is_empty()
        && t.b0 == spec.factors().len()
        && t.components.iter().all(|c| c.genus == 0 && c.punctures == 1);
    let vanishes = report.h1_formula == 0;
    if vanishes != structural {
        return Err(Error::InconsistentSingularityData(format!(
            "h1 = {} disagrees with the structural disjoint-lines test",
            report.h1_formula
        )));
    }
    Ok(vanishes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MultiPoly;
    use crate::topology::rational_line;

    fn poly(t: &[(i64, &[u32])]) -> MultiPoly {
        MultiPoly::from_int_terms(&MultiPoly::ring(&["x", "y"]), t)
    }

    #[test]
    fn cusp_with_oracle() {
        let spec = CurveSpec::single(poly(&[(1, &[0, 2]), (-1, &[3, 0])])).unwrap();
        let r = h1_dimension_weighted(&spec, Some(vec![2, 3]), true, 20).unwrap();
        assert_eq!((r.b1(), r.sum_mu_prime, r.h1_formula), (0, 2, 2));
        assert_eq!(r.verdict, Some(Verdict::Agree));
    }

    #[test]
    fn parallel_lines_and_nodal_cubic() {
        let vars = MultiPoly::ring(&["x", "y"]);
        let par = CurveSpec::new(vec![rational_line(&vars, 1, 0, 0), rational_line(&vars, 1, 0, -1)]).unwrap();
        let r = h1_dimension(&par, true, 12).unwrap();
        assert_eq!((r.b1(), r.sum_mu_prime, r.h1_formula), (0, 0, 0));
        assert_eq!(r.verdict, Some(Verdict::Agree));
        let nodal = CurveSpec::single(poly(&[(1, &[0, 2]), (-1, &[3, 0]), (-1, &[2, 0])])).unwrap();
        let r = h1_dimension(&nodal, true, 16).unwrap();
        assert_eq!((r.b1(), r.sum_mu_prime, r.h1_formula), (1, 1, 2));
        assert_eq!(r.verdict, Some(Verdict::Agree));
    }

    #[test]
    fn disjoint_lines() {
        let vars = MultiPoly::ring(&["x", "y"]);
        let lines = |cs: &[(i64, i64, i64)]| {
            CurveSpec::new(cs.iter().map(|&(a, b, c)| rational_line(&vars, a, b, c)).collect()).unwrap()
        };
        assert!(is_disjoint_lines(&lines(&[(1, 0, 0), (1, 0, -1), (1, 0, -2)])).unwrap());
        assert!(!is_disjoint_lines(&lines(&[(1, 0, 0), (0, 1, 0)])).unwrap());
        let circle = CurveSpec::single(poly(&[(1, &[2, 0]), (1, &[0, 2]), (-1, &[0, 0])])).unwrap();
        assert!(!is_disjoint_lines(&circle).unwrap());
    }

    #[test]
    fn citation_gate_routes_unknown_germs_to_oracle() {
        let cusp = AlgebraPresentation::plane_curve(&poly(&[(1, &[0, 2]), (-1, &[3, 0])]), Some(vec![2, 3])).unwrap();
        assert_eq!(mu_prime(GermKind::PlaneCurve, Some(2), &cusp, 20).unwrap(), MuPrime::Milnor(2));
        let routed = mu_prime(GermKind::Other, Some(2), &cusp, 20).unwrap();
        assert!(matches!(routed, MuPrime::Oracle(_)));
        assert_eq!(routed.value(), 2);
    }
}
