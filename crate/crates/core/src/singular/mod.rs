//! Singular points of plane curves and their local invariants.

mod points;
mod puiseux;

use std::sync::Arc;

use crate::algebra::{squarefree_part, MultiPoly, NumberFieldElement};
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, normal_form, quotient_dimension, Ideal, MonomialOrder};

pub use points::{eval_at, solve_zero_dimensional, AlgebraicPoint};
pub use puiseux::branch_count;

/// Largest truncation order tried before a singularity is declared non-isolated.
const LOCAL_ORDER_BUDGET: u32 = 60;
/// Largest power of the curve equation tried in the global Milnor computation.
const GLOBAL_POWER_BUDGET: u32 = 200;

/// Local invariants at one orbit of singular points.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalInvariants {
    pub point: AlgebraicPoint,
    pub mu: usize,
    pub branches: usize,
    pub delta: usize,
}

fn check_reduced(f: &MultiPoly) -> Result<()> {
    if f.is_zero() {
        return Err(Error::Domain("the zero polynomial does not define a curve".into()));
    }
    if f.is_constant() {
        return Ok(());
    }
    if squarefree_part(f)?.total_degree() != f.total_degree() {
        return Err(Error::CurveNotReduced);
    }
    Ok(())
}

/// Singular points of the affine curve `f = 0`, one entry per Galois orbit.
pub fn singular_points(f: &MultiPoly) -> Result<Vec<AlgebraicPoint>> {
    check_reduced(f)?;
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let system = [f.clone(), f.derivative(0), f.derivative(1)];
    match solve_zero_dimensional(&system) {
        Err(Error::Domain(_)) => Err(Error::NonIsolatedSingularity),
        other => other,
    }
}

/// Ring `(x, y, _a)` together with the images of `x + x0(a)` and `y + y0(a)`.
fn translation(vars: &Arc<[String]>, p: &AlgebraicPoint) -> (Arc<[String]>, Vec<MultiPoly>, MultiPoly) {
    let ring: Arc<[String]> = vec![vars[0].clone(), vars[1].clone(), "_a".to_string()].into();
    let a_poly = |e: &NumberFieldElement| MultiPoly::from_univariate(&ring, 2, e.as_poly());
    let images = vec![
        &MultiPoly::var(&ring, 0) + &a_poly(&p.coords[0]),
        &MultiPoly::var(&ring, 1) + &a_poly(&p.coords[1]),
        MultiPoly::var(&ring, 2),
    ];
    let minpoly = MultiPoly::from_univariate(&ring, 2, p.field.minpoly());
    (ring, images, minpoly)
}

/// `dim_K K[[x, y]] / I` at the point `p`, for an ideal that is zero-dimensional there.
pub fn local_dimension(gens: &[MultiPoly], p: &AlgebraicPoint) -> Result<usize> {
    assert!(!gens.is_empty());
    let vars = gens[0].vars().clone();
    let (ring, images, minpoly) = translation(&vars, p);
    let moved: Vec<MultiPoly> = gens.iter().map(|g| g.embed(&ring, &[0, 1]).substitute(&images)).collect();
    let x = MultiPoly::var(&ring, 0);
    let y = MultiPoly::var(&ring, 1);
    let deg = p.field.degree();
    let mut prev: Option<usize> = None;
    for n in 1..=LOCAL_ORDER_BUDGET {
        let mut all = moved.clone();
        all.push(minpoly.clone());
        all.extend((0..=n).map(|i| &x.pow(i) * &y.pow(n - i)));
        let gb = groebner_basis(&Ideal::new(&ring, all), &MonomialOrder::grevlex(3))?;
        let dim = quotient_dimension(&gb).dimension().expect("truncated ideal is zero-dimensional");
        debug_assert_eq!(dim % deg, 0);
        let d = dim / deg;
        // equal consecutive values force m^(n-1) ⊂ I locally (Nakayama)
        if prev == Some(d) {
            return Ok(d);
        }
        prev = Some(d);
    }
    Err(Error::NonIsolatedSingularity)
}

/// Milnor number `dim K[[x, y]] / (f_x, f_y)` of `f` at `p`.
pub fn local_milnor(f: &MultiPoly, p: &AlgebraicPoint) -> Result<usize> {
    local_dimension(&[f.derivative(0), f.derivative(1)], p)
}

/// Sum of Milnor numbers over all singular points of `f = 0`, counted over ℂ:
/// `dim ℚ[x, y] / (f_x, f_y, f^N)` for `N` large.
pub fn total_milnor_on_curve(f: &MultiPoly) -> Result<usize> {
    check_reduced(f)?;
    let vars = f.vars().clone();
    let n = vars.len();
    let order = MonomialOrder::grevlex(n);
    let jac = [f.derivative(0), f.derivative(1)];
    let gb_j = groebner_basis(&Ideal::new(&vars, jac.iter().cloned()), &order)?;
    if gb_j.is_unit() {
        return Ok(0);
    }
    let with = |h: &MultiPoly| -> Result<usize> {
        let mut gens = gb_j.basis().to_vec();
        gens.push(h.clone());
        let gb = groebner_basis(&Ideal::new(&vars, gens), &order)?;
        quotient_dimension(&gb).dimension().ok_or(Error::CriticalLocusNotFinite)
    };
    let mut power = normal_form(f, &gb_j);
    let mut prev = with(&power)?;
    if let Some(dj) = quotient_dimension(&gb_j).dimension() {
        // m_p^dim(J) ⊂ J_p at every point, so f^dim(J) already saturates
        for _ in 1..dj.max(1) {
            power = normal_form(&(&power * f), &gb_j);
        }
        return with(&power);
    }
    for _ in 0..GLOBAL_POWER_BUDGET {
        power = normal_form(&(&power * f), &gb_j);
        let d = with(&power)?;
        // f^N ∈ J + f^(N+1) forces f^N ∈ J locally on V(f)
        if d == prev {
            return Ok(d);
        }
        prev = d;
    }
    Err(Error::BudgetExceeded("global Milnor number did not stabilize".into()))
}

/// `δ = (μ + r - 1) / 2`.
pub fn delta_invariant(mu: usize, branches: usize) -> Result<usize> {
    let s = mu + branches;
    if branches == 0 || s % 2 == 0 {
        return Err(Error::InconsistentSingularityData(format!("mu = {mu}, r = {branches}")));
    }
    Ok((s - 1) / 2)
}

/// Local invariants at a single point.
pub fn local_invariants(f: &MultiPoly, p: &AlgebraicPoint) -> Result<LocalInvariants> {
    let mu = local_milnor(f, p)?;
    let branches = branch_count(f, p)?;
    let delta = delta_invariant(mu, branches)?;
    Ok(LocalInvariants { point: p.clone(), mu, branches, delta })
}

/// Local invariants at every singular point of the affine curve.
pub fn singularity_census(f: &MultiPoly) -> Result<Vec<LocalInvariants>> {
    singular_points(f)?.iter().map(|p| local_invariants(f, p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(t: &[(i64, &[u32])]) -> MultiPoly {
        MultiPoly::from_int_terms(&MultiPoly::ring(&["x", "y"]), t)
    }

    fn cusp() -> MultiPoly {
        poly(&[(1, &[0, 2]), (-1, &[3, 0])])
    }

    fn nodal() -> MultiPoly {
        poly(&[(1, &[0, 2]), (-1, &[3, 0]), (-1, &[2, 0])])
    }

    fn circle() -> MultiPoly {
        poly(&[(1, &[2, 0]), (1, &[0, 2]), (-1, &[0, 0])])
    }

    #[test]
    fn singular_points_of_standard_curves() {
        assert_eq!(singular_points(&cusp()).unwrap(), vec![AlgebraicPoint::origin()]);
        assert_eq!(singular_points(&nodal()).unwrap(), vec![AlgebraicPoint::origin()]);
        assert!(singular_points(&circle()).unwrap().is_empty());
    }

    #[test]
    fn non_reduced_curve_is_rejected() {
        let f = poly(&[(1, &[2, 0]), (-2, &[1, 1]), (1, &[0, 2])]);
        assert_eq!(singular_points(&f), Err(Error::CurveNotReduced));
    }

    #[test]
    fn local_milnor_numbers() {
        let o = AlgebraicPoint::origin();
        assert_eq!(local_milnor(&poly(&[(1, &[1, 1])]), &o).unwrap(), 1);
        assert_eq!(local_milnor(&cusp(), &o).unwrap(), 2);
        assert_eq!(local_milnor(&poly(&[(1, &[0, 2]), (-1, &[4, 0])]), &o).unwrap(), 3);
    }

    #[test]
    fn local_milnor_at_conjugate_point() {
        // y^2 = (x^2 - 2)^2 (x + 1) has nodes at (±√2, 0)
        let f = poly(&[(1, &[0, 2]), (-1, &[5, 0]), (-1, &[4, 0]), (4, &[3, 0]), (4, &[2, 0]), (-4, &[1, 0]), (-4, &[0, 0])]);
        let pts = singular_points(&f).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].orbit_size, 2);
        let inv = local_invariants(&f, &pts[0]).unwrap();
        assert_eq!((inv.mu, inv.branches, inv.delta), (1, 2, 1));
        assert_eq!(total_milnor_on_curve(&f).unwrap(), 2);
    }

    #[test]
    fn total_milnor_numbers() {
        assert_eq!(total_milnor_on_curve(&cusp()).unwrap(), 2);
        assert_eq!(total_milnor_on_curve(&nodal()).unwrap(), 1);
        assert_eq!(total_milnor_on_curve(&circle()).unwrap(), 0);
        // parallel lines: the critical locus x = 1/2 misses the curve
        assert_eq!(total_milnor_on_curve(&poly(&[(1, &[2, 0]), (-1, &[1, 0])])).unwrap(), 0);
        assert_eq!(total_milnor_on_curve(&poly(&[(1, &[2, 1]), (1, &[1, 2])])).unwrap(), 4);
    }

    #[test]
    fn delta_from_mu_and_branches() {
        assert_eq!(delta_invariant(2, 1).unwrap(), 1);
        assert_eq!(delta_invariant(1, 2).unwrap(), 1);
        assert_eq!(delta_invariant(0, 1).unwrap(), 0);
        assert!(matches!(delta_invariant(2, 2), Err(Error::InconsistentSingularityData(_))));
    }
}
