//! Projective closure, points at infinity, genus, Euler characteristic and Betti numbers
//! of reduced affine plane curves.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{factor_univariate_poly, rat, squarefree_part, Field, Monomial, MultiPoly, NumberField, NumberFieldElement, Rational, RationalField, UPoly};
use crate::error::{Error, Result};
use crate::groebner::poly_gcd;
use crate::singular::{
    branch_count, delta_invariant, eval_at, local_milnor, singular_points, singularity_census, AlgebraicPoint,
};

/// A reduced affine plane curve given as a product of asserted absolutely irreducible factors.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveSpec {
    vars: Arc<[String]>,
    factors: Vec<MultiPoly>,
    product: MultiPoly,
}

impl CurveSpec {
    pub fn new(factors: Vec<MultiPoly>) -> Result<Self> {
        let Some(first) = factors.first() else {
            return Err(Error::InvalidCurveSpec("no factors".into()));
        };
        let vars = first.vars().clone();
        if vars.len() != 2 {
            return Err(Error::InvalidCurveSpec("curves live in two variables".into()));
        }
        for (i, f) in factors.iter().enumerate() {
            if f.vars() != &vars {
                return Err(Error::InvalidCurveSpec(format!("factor {} uses a different ring", i + 1)));
            }
            if f.is_constant() {
                return Err(Error::InvalidCurveSpec(format!("factor {} is constant", i + 1)));
            }
            if squarefree_part(f)?.total_degree() != f.total_degree() {
                return Err(Error::CurveNotReduced);
            }
            for (j, g) in factors[..i].iter().enumerate() {
                if !poly_gcd(f, g)?.is_constant() {
                    return Err(Error::InvalidCurveSpec(format!(
                        "factors {} and {} share a component",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        let product = factors.iter().skip(1).fold(first.clone(), |acc, f| &acc * f);
        Ok(CurveSpec { vars, factors, product })
    }

    pub fn single(f: MultiPoly) -> Result<Self> {
        Self::new(vec![f])
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn factors(&self) -> &[MultiPoly] {
        &self.factors
    }

    pub fn product(&self) -> &MultiPoly {
        &self.product
    }
}

/// An orbit of points `(X : Y : 0)` on the line at infinity.
#[derive(Clone, Debug, PartialEq)]
pub struct InfinityPoint {
    pub field: NumberField,
    pub coords: [NumberFieldElement; 2],
    /// Branches of each component through this point, keyed by component index.
    pub branches: BTreeMap<usize, usize>,
    pub orbit_size: usize,
}

/// Degree, geometric genus and number of places at infinity of one component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentData {
    pub degree: u32,
    pub genus: usize,
    pub punctures: usize,
}

/// A finite point where the full curve has more than one branch.
#[derive(Clone, Debug, PartialEq)]
pub struct IncidencePoint {
    pub point: AlgebraicPoint,
    pub components: Vec<usize>,
    pub branches: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TopologyReport {
    pub b0: usize,
    pub b1: usize,
    pub chi: i64,
    pub components: Vec<ComponentData>,
    pub incidence: Vec<IncidencePoint>,
    pub infinity: Vec<InfinityPoint>,
}

/// Identifies a point at infinity: `None` is `(0:1:0)`, otherwise the minimal polynomial of
/// `β` for `(1:β:0)`.
type InfinityKey = Option<UPoly<Rational>>;

/// Local invariants of one component at an orbit of points at infinity.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalAtInfinity {
    key: InfinityKey,
    pub field: NumberField,
    /// `(X, Y)` of the point `(X : Y : 0)`.
    pub coords: [NumberFieldElement; 2],
    pub orbit_size: usize,
    pub mu: usize,
    pub branches: usize,
    pub delta: usize,
}

/// Affine chart of the projective closure: `x = 1` (`at_y_axis = false`) gives `G(y, z)`,
/// `y = 1` gives `G(x, z)`.
fn chart(f: &MultiPoly, at_y_axis: bool) -> MultiPoly {
    let d = f.total_degree().unwrap();
    let keep = if at_y_axis { 0 } else { 1 };
    let ring: Arc<[String]> = vec![f.vars()[keep].clone(), "_z".to_string()].into();
    MultiPoly::from_terms(
        &ring,
        f.terms().map(|(m, c)| (Monomial::new(vec![m.exps()[keep], d - m.degree()]), c.clone())),
    )
}

/// Points at infinity of one component with `μ`, branches and `δ` in the affine chart.
pub fn infinity_of_component(f: &MultiPoly) -> Result<Vec<LocalAtInfinity>> {
    let d = f.total_degree().unwrap();
    let top = f.top_form();
    let mut coeffs = vec![Rational::zero(); d as usize + 1];
    for (m, c) in top.terms() {
        coeffs[m.exps()[1] as usize] = c.clone();
    }
    let y_top_missing = coeffs[d as usize].is_zero();
    let dehom = UPoly::from_coeffs(&RationalField, coeffs);
    let mut out = Vec::new();
    let local = |g: &MultiPoly, pt: AlgebraicPoint, key: InfinityKey| -> Result<LocalAtInfinity> {
        let mu = local_milnor(g, &pt)?;
        let branches = branch_count(g, &pt)?;
        let delta = delta_invariant(mu, branches)?;
        Ok(LocalAtInfinity {
            key,
            orbit_size: pt.orbit_size,
            field: pt.field.clone(),
            coords: [pt.coords[0].clone(), pt.coords[1].clone()],
            mu,
            branches,
            delta,
        })
    };
    if dehom.degree().unwrap_or(0) > 0 {
        let g = chart(f, false);
        for (h, _) in factor_univariate_poly(&dehom)? {
            let k = if h.degree() == Some(1) { NumberField::rationals() } else { NumberField::new(h.clone())? };
            let beta = if h.degree() == Some(1) {
                k.embed(&-(&h.coeffs()[0] / &h.coeffs()[1]))
            } else {
                k.generator()
            };
            let pt = AlgebraicPoint { orbit_size: k.degree(), field: k.clone(), coords: [beta.clone(), k.zero()] };
            let mut loc = local(&g, pt, Some(h.monic(&RationalField)))?;
            loc.coords = [k.one(), beta];
            out.push(loc);
        }
    }
    if y_top_missing {
        let g = chart(f, true);
        let k = NumberField::rationals();
        let mut loc = local(&g, AlgebraicPoint::origin(), None)?;
        loc.coords = [k.zero(), k.one()];
        out.push(loc);
    }
    Ok(out)
}

/// Points at infinity of the projective closure with per-component branch counts.
pub fn projective_data(spec: &CurveSpec) -> Result<Vec<InfinityPoint>> {
    let mut merged: BTreeMap<Vec<String>, InfinityPoint> = BTreeMap::new();
    for (i, f) in spec.factors().iter().enumerate() {
        for loc in infinity_of_component(f)? {
            let key = infinity_key_string(&loc.key);
            let entry = merged.entry(key).or_insert_with(|| InfinityPoint {
                field: loc.field.clone(),
                coords: loc.coords.clone(),
                branches: BTreeMap::new(),
                orbit_size: loc.orbit_size,
            });
            entry.branches.insert(i, loc.branches);
        }
    }
    Ok(merged.into_values().collect())
}

fn infinity_key_string(key: &InfinityKey) -> Vec<String> {
    match key {
        None => vec!["inf".into()],
        Some(h) => h.coeffs().iter().map(|c| c.to_string()).collect(),
    }
}

fn component_data(f: &MultiPoly) -> Result<ComponentData> {
    let d = f.total_degree().unwrap();
    let arithmetic = ((d as i64 - 1) * (d as i64 - 2)) / 2;
    let mut delta_sum = 0i64;
    for inv in singularity_census(f)? {
        delta_sum += (inv.point.orbit_size * inv.delta) as i64;
    }
    let mut punctures = 0;
    for loc in infinity_of_component(f)? {
        delta_sum += (loc.orbit_size * loc.delta) as i64;
        punctures += loc.orbit_size * loc.branches;
    }
    let genus = arithmetic - delta_sum;
    if genus < 0 || punctures == 0 {
        return Err(Error::ComponentNotAbsolutelyIrreducible(f.to_expr_string()));
    }
    Ok(ComponentData { degree: d, genus: genus as usize, punctures })
}

/// Geometric genus of the projective closure of one absolutely irreducible factor.
pub fn component_genus(factor: &MultiPoly) -> Result<usize> {
    Ok(component_data(factor)?.genus)
}

/// Euler characteristic of the affine curve.
pub fn euler_characteristic(spec: &CurveSpec) -> Result<i64> {
    Ok(betti_numbers(spec)?.chi)
}

/// `b0`, `b1 = b0 - χ` and the data they are assembled from.
pub fn betti_numbers(spec: &CurveSpec) -> Result<TopologyReport> {
    let components: Vec<ComponentData> = spec.factors().iter().map(component_data).collect::<Result<_>>()?;
    let mut chi: i64 = components.iter().map(|c| 2 - 2 * c.genus as i64 - c.punctures as i64).sum();

    let f = spec.product();
    let mut incidence = Vec::new();
    for p in singular_points(f)? {
        let r = branch_count(f, &p)?;
        if r <= 1 {
            continue;
        }
        chi -= (p.orbit_size * (r - 1)) as i64;
        let through: Vec<usize> = spec
            .factors()
            .iter()
            .enumerate()
            .filter(|(_, g)| eval_at(g, &p.field, &p.coords).is_zero())
            .map(|(i, _)| i)
            .collect();
        incidence.push(IncidencePoint { point: p, components: through, branches: r });
    }

    let b0 = count_connected(spec.factors().len(), &incidence);
    let b1 = b0 as i64 - chi;
    if b1 < 0 {
        return Err(Error::InconsistentSingularityData(format!("b0 = {b0} exceeds chi = {chi}")));
    }
    let infinity = projective_data(spec)?;
    Ok(TopologyReport { b0, b1: b1 as usize, chi, components, incidence, infinity })
}

fn count_connected(n: usize, incidence: &[IncidencePoint]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        parent[i] = r;
        r
    }
    for inc in incidence {
        for w in inc.components.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}

/// The line `a x + b y + c`.
pub fn rational_line(vars: &Arc<[String]>, a: i64, b: i64, c: i64) -> MultiPoly {
    MultiPoly::from_terms(
        vars,
        [
            (Monomial::new(vec![1, 0]), rat(a)),
            (Monomial::new(vec![0, 1]), rat(b)),
            (Monomial::new(vec![0, 0]), rat(c)),
        ],
    )
}
