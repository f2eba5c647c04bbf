//! Brute-force side of the verification: truncated exact linear algebra for
//! `Ω¹(A)/dA`, its formal local version at the origin, and numerical semigroups.

mod linalg;

use std::collections::HashMap;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;

use crate::algebra::{Monomial, MultiPoly, Rational};
use crate::error::{Error, Result};
use crate::groebner::{
    eliminate, groebner_basis, krull_dimension, quotient_dimension, standard_monomials_up_to, GroebnerBasis, Ideal,
    MonomialOrder, Reducer,
};
use linalg::{integer_row, Echelon, SparseRow};

/// Trailing degrees that must contribute nothing before a result counts as stabilized.
pub const DEFAULT_WINDOW: usize = 4;

/// A finitely presented algebra `ℚ[x₁, …, xₙ]/(relations)` with positive variable weights.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraPresentation {
    vars: Arc<[String]>,
    relations: Vec<MultiPoly>,
    weights: Vec<u32>,
    graded: bool,
}

impl AlgebraPresentation {
    pub fn new(vars: &Arc<[String]>, relations: Vec<MultiPoly>, weights: Option<Vec<u32>>) -> Result<Self> {
        let weights = weights.unwrap_or_else(|| vec![1; vars.len()]);
        if weights.len() != vars.len() || weights.contains(&0) {
            return Err(Error::NotACurvePresentation("weights must be positive, one per variable".into()));
        }
        let relations: Vec<MultiPoly> = relations.into_iter().filter(|r| !r.is_zero()).collect();
        if relations.iter().any(|r| r.vars() != vars) {
            return Err(Error::NotACurvePresentation("relation over a different ring".into()));
        }
        let graded = relations.iter().all(|r| r.is_weighted_homogeneous(&weights));
        Ok(AlgebraPresentation { vars: vars.clone(), relations, weights, graded })
    }

    /// Coordinate ring of a plane curve `f = 0`.
    pub fn plane_curve(f: &MultiPoly, weights: Option<Vec<u32>>) -> Result<Self> {
        Self::new(f.vars(), vec![f.clone()], weights)
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn relations(&self) -> &[MultiPoly] {
        &self.relations
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn order(&self) -> MonomialOrder {
        MonomialOrder::weighted(self.weights.clone())
    }
}

/// Truncated cokernel dimensions of `d: A → Ω¹(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub degree_bound: u32,
    /// `(degree, increment)`: new cokernel dimension contributed in that degree.
    pub per_degree: Vec<(u32, i64)>,
    pub value: usize,
    pub stabilized: bool,
    pub stabilization_window: usize,
}

impl OracleResult {
    fn from_cumulative(degree_bound: u32, cumulative: &[(u32, i64)], certified_above: Option<u32>) -> Self {
        let mut per_degree = Vec::with_capacity(cumulative.len());
        let mut prev = 0i64;
        for &(d, c) in cumulative {
            per_degree.push((d, c - prev));
            prev = c;
        }
        let window = DEFAULT_WINDOW;
        let mut stabilized =
            per_degree.len() >= window && per_degree[per_degree.len() - window..].iter().all(|&(_, inc)| inc == 0);
        if let Some(bound) = certified_above {
            if per_degree.iter().any(|&(d, inc)| d > bound && inc != 0) {
                stabilized = false;
            }
        }
        OracleResult {
            degree_bound,
            per_degree,
            value: prev.max(0) as usize,
            stabilized,
            stabilization_window: window,
        }
    }
}

fn curve_basis(pres: &AlgebraPresentation) -> Result<GroebnerBasis> {
    let gb = groebner_basis(&Ideal::new(&pres.vars, pres.relations.iter().cloned()), &pres.order())?;
    match krull_dimension(gb.leading_monomials(), pres.nvars()) {
        Some(1) => Ok(gb),
        None => Err(Error::NotACurvePresentation("the relations generate the unit ideal".into())),
        Some(k) => Err(Error::NotACurvePresentation(format!("quotient has dimension {k}, not 1"))),
    }
}

/// Columns `(i, t)` standing for `t dxᵢ`, sorted by descending degree so that row echelon
/// pivots in low-degree columns span the intersection with each filtration level.
struct Columns {
    index: HashMap<(usize, Monomial), usize>,
    degree: Vec<u32>,
}

impl Columns {
    fn new(standard: &[Monomial], weights: &[u32], degree_of: impl Fn(&Monomial, usize) -> Option<u32>) -> Self {
        let mut cols: Vec<(u32, usize, Monomial)> = Vec::new();
        for i in 0..weights.len() {
            for t in standard {
                if let Some(d) = degree_of(t, i) {
                    cols.push((d, i, t.clone()));
                }
            }
        }
        cols.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
        let degree = cols.iter().map(|c| c.0).collect();
        let index = cols.into_iter().enumerate().map(|(j, (_, i, t))| ((i, t), j)).collect();
        Columns { index, degree }
    }

    fn len(&self) -> usize {
        self.degree.len()
    }

    fn row(&self, components: &[MultiPoly]) -> SparseRow {
        let mut entries: Vec<(usize, Rational)> = Vec::new();
        for (i, c) in components.iter().enumerate() {
            for (m, v) in c.terms() {
                let j = *self.index.get(&(i, m.clone())).expect("row entry outside the truncation");
                entries.push((j, v.clone()));
            }
        }
        integer_row(entries)
    }
}

fn one_form_row(cols: &Columns, red: &Reducer<'_>, factor: &MultiPoly, rho: &MultiPoly) -> SparseRow {
    let comps: Vec<MultiPoly> =
        (0..rho.nvars()).map(|i| red.normal_form(&(factor * &rho.derivative(i)))).collect();
    cols.row(&comps)
}

fn exact_row(cols: &Columns, s: &Monomial, vars: &Arc<[String]>) -> SparseRow {
    let p = MultiPoly::term(vars, s.clone(), Rational::from_integer(1.into()));
    let comps: Vec<MultiPoly> = (0..vars.len()).map(|i| p.derivative(i)).collect();
    cols.row(&comps)
}

/// `dim Ω¹(A)/dA` read off degree by degree up to `degree_bound`.
///
/// Graded presentations are computed exactly per degree. Otherwise the span of relations and
/// exact forms is truncated a little above the bound and intersected with each filtration
/// level; the result is trusted only once a window of trailing degrees contributes nothing.
pub fn truncated_h1(pres: &AlgebraPresentation, degree_bound: u32) -> Result<OracleResult> {
    let gb = curve_basis(pres)?;
    let w = pres.weights();
    let rel_degrees: Vec<u32> = gb.basis().iter().map(|g| g.weighted_degree(w).unwrap_or(0)).collect();
    let top = if pres.graded {
        degree_bound
    } else {
        degree_bound + 2 * rel_degrees.iter().copied().max().unwrap_or(0) + 2
    };
    let standard = standard_monomials_up_to(gb.leading_monomials(), w, top);
    let cols = Columns::new(&standard, w, |t, i| {
        let d = t.weighted_degree(w) + w[i];
        (d <= top).then_some(d)
    });
    let red = Reducer::new(&gb);
    let mut ech = Echelon::new();
    for (rho, &rd) in gb.basis().iter().zip(&rel_degrees) {
        for s in standard.iter().filter(|s| s.weighted_degree(w) + rd <= top) {
            let factor = MultiPoly::term(&pres.vars, s.clone(), Rational::from_integer(1.into()));
            ech.insert(one_form_row(&cols, &red, &factor, rho));
        }
    }
    for s in &standard {
        ech.insert(exact_row(&cols, s, &pres.vars));
    }
    let cumulative = filtration_counts(&cols, &ech, degree_bound);
    let certified = pres.graded.then(|| 2 * pres.relations.iter().map(|r| r.weighted_degree(w).unwrap_or(0)).sum::<u32>());
    Ok(OracleResult::from_cumulative(degree_bound, &cumulative, certified))
}

/// `(D, dim F_D / (F_D ∩ span))` for `D = 0..=bound`.
fn filtration_counts(cols: &Columns, ech: &Echelon, bound: u32) -> Vec<(u32, i64)> {
    let mut col_count = vec![0i64; bound as usize + 1];
    let mut piv_count = vec![0i64; bound as usize + 1];
    for &d in &cols.degree {
        if d <= bound {
            col_count[d as usize] += 1;
        }
    }
    for j in ech.pivot_columns() {
        let d = cols.degree[j];
        if d <= bound {
            piv_count[d as usize] += 1;
        }
    }
    let mut out = Vec::new();
    let mut acc = 0i64;
    for d in 0..=bound {
        acc += col_count[d as usize] - piv_count[d as usize];
        out.push((d, acc));
    }
    out
}

/// Local `dim Ω̂¹/dÔ` of the germ at the origin.
///
/// Weighted-homogeneous germs agree with the graded global computation. Otherwise the
/// cokernel of `d: Ô/m^(N+1) → Ω̂¹/m^N Ω̂¹` is computed for `N = 1..=degree_bound`.
pub fn truncated_mu_prime(pres: &AlgebraPresentation, degree_bound: u32) -> Result<OracleResult> {
    let n = pres.nvars();
    let origin = Monomial::one(n);
    if pres.relations.iter().any(|r| !r.coefficient(&origin).is_zero()) {
        return Err(Error::Domain("presentation is not a germ at the origin".into()));
    }
    if pres.graded {
        return truncated_h1(pres, degree_bound);
    }
    curve_basis(pres)?;
    let order = pres.order();
    let truncated = |level: u32| -> Result<GroebnerBasis> {
        let mut gens = pres.relations.clone();
        gens.extend(monomials_of_degree(n, level).into_iter().map(|m| {
            MultiPoly::term(&pres.vars, m, Rational::from_integer(1.into()))
        }));
        groebner_basis(&Ideal::new(&pres.vars, gens), &order)
    };
    let mut cumulative = Vec::new();
    let mut next = truncated(1)?;
    for level in 1..=degree_bound {
        let gb = next;
        next = truncated(level + 1)?;
        let standard = quotient_dimension(&gb).standard_monomials.expect("truncated ideal is zero-dimensional");
        let standard_next = quotient_dimension(&next).standard_monomials.expect("truncated ideal is zero-dimensional");
        let cols = Columns::new(&standard, &vec![1; n], |t, _| Some(t.degree() + 1));
        let red = Reducer::new(&gb);
        let mut ech = Echelon::new();
        for rho in &pres.relations {
            for s in &standard {
                let factor = MultiPoly::term(&pres.vars, s.clone(), Rational::from_integer(1.into()));
                ech.insert(one_form_row(&cols, &red, &factor, rho));
            }
        }
        for s in &standard_next {
            let p = MultiPoly::term(&pres.vars, s.clone(), Rational::from_integer(1.into()));
            let comps: Vec<MultiPoly> = (0..n).map(|i| red.normal_form(&p.derivative(i))).collect();
            ech.insert(cols.row(&comps));
        }
        cumulative.push((level, cols.len() as i64 - ech.rank() as i64));
    }
    Ok(OracleResult::from_cumulative(degree_bound, &cumulative, None))
}

fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == n - 1 {
            cur.push(d);
            out.push(Monomial::new(cur.clone()));
            cur.pop();
            return;
        }
        for e in 0..=d {
            cur.push(e);
            rec(n, d - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// A numerical semigroup `⟨a₁, …, aₖ⟩` with its gaps and the toric ideal of the monomial
/// curve `t ↦ (t^a₁, …, t^aₖ)` in variables `w1, …, wk`.
#[derive(Clone, Debug, PartialEq)]
pub struct SemigroupData {
    pub generators: Vec<u32>,
    pub gaps: Vec<u32>,
    pub conductor: u32,
    pub toric_relations: Vec<MultiPoly>,
}

impl SemigroupData {
    pub fn contains(&self, n: u32) -> bool {
        n >= self.conductor || self.gaps.binary_search(&n).is_err()
    }

    /// The monomial curve as a graded presentation with the generators as weights.
    pub fn presentation(&self) -> Result<AlgebraPresentation> {
        let names: Vec<String> = (1..=self.generators.len()).map(|i| format!("w{i}")).collect();
        let vars: Arc<[String]> = names.into();
        AlgebraPresentation::new(&vars, self.toric_relations.clone(), Some(self.generators.clone()))
    }
}

pub fn semigroup_data(generators: &[u32]) -> Result<SemigroupData> {
    if generators.is_empty() || generators.contains(&0) || generators.iter().fold(0u32, |g, &a| g.gcd(&a)) != 1 {
        return Err(Error::NotANumericalSemigroup);
    }
    let amin = *generators.iter().min().unwrap() as usize;
    let amax = *generators.iter().max().unwrap() as usize;
    let bound = amin * amax;
    let mut reach = vec![false; bound + 1];
    reach[0] = true;
    for n in 1..=bound {
        reach[n] = generators.iter().any(|&a| a as usize <= n && reach[n - a as usize]);
    }
    let gaps: Vec<u32> = (0..=bound).filter(|&n| !reach[n]).map(|n| n as u32).collect();
    let conductor = gaps.last().map_or(0, |g| g + 1);

    let k = generators.len();
    let mut names = vec!["_t".to_string()];
    names.extend((1..=k).map(|i| format!("w{i}")));
    let big: Arc<[String]> = names.into();
    let gens = generators.iter().enumerate().map(|(i, &a)| {
        let mut e = vec![0; k + 1];
        e[0] = a;
        &MultiPoly::var(&big, i + 1) - &MultiPoly::term(&big, Monomial::new(e), Rational::from_integer(1.into()))
    });
    let keep: Vec<usize> = (1..=k).collect();
    let elim = eliminate(&Ideal::new(&big, gens), &keep)?;
    let small: Arc<[String]> = big[1..].to_vec().into();
    let mut index_map = vec![0];
    index_map.extend(0..k);
    let toric_relations = elim.generators().iter().map(|g| g.embed(&small, &index_map)).collect();
    Ok(SemigroupData { generators: generators.to_vec(), gaps, conductor, toric_relations })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<[String]> {
        MultiPoly::ring(&["x", "y"])
    }

    fn curve(t: &[(i64, &[u32])], weights: Option<Vec<u32>>) -> AlgebraPresentation {
        AlgebraPresentation::plane_curve(&MultiPoly::from_int_terms(&ring(), t), weights).unwrap()
    }

    #[test]
    fn cusp_graded() {
        let r = truncated_h1(&curve(&[(1, &[0, 2]), (-1, &[3, 0])], Some(vec![2, 3])), 20).unwrap();
        assert_eq!((r.value, r.stabilized), (2, true));
    }

    #[test]
    fn affine_line() {
        let vars = MultiPoly::ring(&["x"]);
        let r = truncated_h1(&AlgebraPresentation::new(&vars, vec![], None).unwrap(), 10).unwrap();
        assert_eq!((r.value, r.stabilized), (0, true));
    }

    #[test]
    fn hyperbola_filtered() {
        let r = truncated_h1(&curve(&[(1, &[1, 1]), (-1, &[0, 0])], None), 12).unwrap();
        assert_eq!((r.value, r.stabilized), (1, true));
    }

    #[test]
    fn not_a_curve() {
        let vars = MultiPoly::ring(&["x", "y"]);
        let pres = AlgebraPresentation::new(&vars, vec![], None).unwrap();
        assert!(matches!(truncated_h1(&pres, 5), Err(Error::NotACurvePresentation(_))));
    }

    #[test]
    fn germs() {
        let cusp = curve(&[(1, &[0, 2]), (-1, &[3, 0])], Some(vec![2, 3]));
        assert_eq!(truncated_mu_prime(&cusp, 20).unwrap().value, 2);
        let smooth = curve(&[(1, &[0, 1]), (-1, &[2, 0])], None);
        let r = truncated_mu_prime(&smooth, 12).unwrap();
        assert_eq!((r.value, r.stabilized), (0, true));
        let node = curve(&[(1, &[1, 1])], None);
        assert_eq!(truncated_mu_prime(&node, 12).unwrap().value, 1);
        // node of the nodal cubic, not weighted homogeneous
        let nodal = curve(&[(1, &[0, 2]), (-1, &[3, 0]), (-1, &[2, 0])], None);
        let r = truncated_mu_prime(&nodal, 12).unwrap();
        assert_eq!((r.value, r.stabilized), (1, true));
    }

    #[test]
    fn semigroups() {
        let s = semigroup_data(&[2, 3]).unwrap();
        assert_eq!((s.gaps.clone(), s.conductor), (vec![1], 2));
        assert!(s.contains(5) && !s.contains(1));
        let s = semigroup_data(&[3, 4, 5]).unwrap();
        assert_eq!((s.gaps.clone(), s.conductor), (vec![1, 2], 3));
        let s = semigroup_data(&[1]).unwrap();
        assert_eq!((s.gaps.len(), s.conductor), (0, 0));
        assert_eq!(semigroup_data(&[4, 6]), Err(Error::NotANumericalSemigroup));
    }

    #[test]
    fn semigroup_curve_feeds_germ_oracle() {
        let s = semigroup_data(&[2, 3]).unwrap();
        let r = truncated_mu_prime(&s.presentation().unwrap(), 20).unwrap();
        assert_eq!((r.value, r.stabilized), (2, true));
    }
}
