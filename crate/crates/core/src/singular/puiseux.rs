//! Branch counting by Newton–Puiseux recursion with explicit coefficient fields.

use std::collections::BTreeMap;

use num_integer::Integer;

use super::points::AlgebraicPoint;
use crate::algebra::{factor_over_number_field, Field, MultiPoly, NumberField, NumberFieldElement, RationalField, UPoly};
use crate::error::{Error, Result};

const MAX_DEPTH: usize = 64;

/// Bivariate polynomial over a number field, keyed by `(x exponent, y exponent)`.
#[derive(Clone, Debug)]
pub(crate) struct BiPoly {
    k: NumberField,
    terms: BTreeMap<(u32, u32), NumberFieldElement>,
}

impl BiPoly {
    fn add_term(&mut self, key: (u32, u32), c: NumberFieldElement) {
        let k = &self.k;
        let v = match self.terms.remove(&key) {
            Some(old) => k.add(&old, &c),
            None => c,
        };
        if !k.is_zero(&v) {
            self.terms.insert(key, v);
        }
    }

    /// `f(x + x0, y + y0)` over the field of the point.
    pub(crate) fn translated(f: &MultiPoly, p: &AlgebraicPoint) -> BiPoly {
        let k = p.field.clone();
        let dx = f.degree_in(0).unwrap_or(0) as usize;
        let dy = f.degree_in(1).unwrap_or(0) as usize;
        let powers = |v: &NumberFieldElement, n: usize| {
            let mut out = vec![k.one()];
            for _ in 0..n {
                out.push(k.mul(out.last().unwrap(), v));
            }
            out
        };
        let px = powers(&p.coords[0], dx);
        let py = powers(&p.coords[1], dy);
        let binom = binomials(dx.max(dy));
        let mut g = BiPoly { k: k.clone(), terms: BTreeMap::new() };
        for (m, c) in f.terms() {
            let (i, j) = (m.exps()[0] as usize, m.exps()[1] as usize);
            let c = k.embed(c);
            for a in 0..=i {
                let ca = k.mul(&c, &k.mul(&k.from_int(binom[i][a]), &px[i - a]));
                for b in 0..=j {
                    let v = k.mul(&ca, &k.mul(&k.from_int(binom[j][b]), &py[j - b]));
                    g.add_term((a as u32, b as u32), v);
                }
            }
        }
        g
    }

    fn constant_term_is_zero(&self) -> bool {
        !self.terms.contains_key(&(0, 0))
    }

    fn divisible_by_x(&self) -> bool {
        self.terms.keys().all(|&(i, _)| i > 0)
    }

    fn divisible_by_y(&self) -> bool {
        self.terms.keys().all(|&(_, j)| j > 0)
    }

    fn shift(&self, di: u32, dj: u32) -> BiPoly {
        BiPoly {
            k: self.k.clone(),
            terms: self.terms.iter().map(|(&(i, j), c)| ((i - di, j - dj), c.clone())).collect(),
        }
    }

    fn coeff(&self, i: u32, j: u32) -> NumberFieldElement {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(|| self.k.zero())
    }

    fn move_to(&self, k2: &NumberField) -> BiPoly {
        BiPoly {
            k: k2.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&key, c)| (key, k2.embed(&c.as_rational().expect("moving only from ℚ"))))
                .collect(),
        }
    }
}

fn binomials(n: usize) -> Vec<Vec<i64>> {
    let mut t = vec![vec![1i64]];
    for i in 1..=n {
        let prev = &t[i - 1];
        let mut row = vec![1i64; i + 1];
        for j in 1..i {
            row[j] = prev[j - 1] + prev[j];
        }
        t.push(row);
    }
    t
}

/// Number of local analytic branches of `f = 0` at `p`.
pub fn branch_count(f: &MultiPoly, p: &AlgebraicPoint) -> Result<usize> {
    let g = BiPoly::translated(f, p);
    if !g.constant_term_is_zero() {
        return Err(Error::Domain("branch count at a point not on the curve".into()));
    }
    branches(g, 0)
}

/// Lower-left Newton polygon edges from the y-axis to the x-axis, as vertex pairs.
fn newton_edges(g: &BiPoly) -> Vec<((u32, u32), (u32, u32))> {
    let pts: Vec<(u32, u32)> = g.terms.keys().copied().collect();
    let j0 = pts.iter().filter(|p| p.0 == 0).map(|p| p.1).min().unwrap();
    let mut cur = (0u32, j0);
    let mut edges = Vec::new();
    while cur.1 > 0 {
        // next vertex: smallest run per drop, farthest along ties
        let next = pts
            .iter()
            .filter(|p| p.1 < cur.1)
            .copied()
            .min_by(|a, b| {
                let (ra, da) = ((a.0 - cur.0) as u64, (cur.1 - a.1) as u64);
                let (rb, db) = ((b.0 - cur.0) as u64, (cur.1 - b.1) as u64);
                (ra * db).cmp(&(rb * da)).then(a.1.cmp(&b.1))
            })
            .unwrap();
        edges.push((cur, next));
        cur = next;
    }
    edges
}

fn branches(mut g: BiPoly, depth: usize) -> Result<usize> {
    if depth > MAX_DEPTH {
        return Err(Error::BudgetExceeded("Newton-Puiseux recursion too deep".into()));
    }
    let mut count = 0;
    if g.divisible_by_x() {
        g = g.shift(1, 0);
        if g.divisible_by_x() {
            return Err(Error::CurveNotReduced);
        }
        count += 1;
    }
    if g.divisible_by_y() {
        g = g.shift(0, 1);
        if g.divisible_by_y() {
            return Err(Error::CurveNotReduced);
        }
        count += 1;
    }
    if !g.constant_term_is_zero() {
        return Ok(count);
    }
    let k = g.k.clone();
    for ((i1, j1), (i2, j2)) in newton_edges(&g) {
        let (di, dj) = (i2 - i1, j1 - j2);
        let e = di.gcd(&dj);
        let (p, q) = (di / e, dj / e);
        let phi = UPoly::from_coeffs(&k, (0..=e).map(|s| g.coeff(i2 - p * s, j2 + q * s)).collect());
        for (psi, mult) in factor_over_number_field(&k, &phi)? {
            let deg = psi.degree().unwrap();
            if mult == 1 {
                count += deg;
                continue;
            }
            let (k2, xi, base) = if deg == 1 {
                let xi = k.neg(&k.div(&psi.coeffs()[0], &psi.coeffs()[1]).unwrap());
                (k.clone(), xi, g.clone())
            } else if k.is_rationals() {
                let minpoly = UPoly::from_coeffs(
                    &RationalField,
                    psi.coeffs().iter().map(|c| c.as_rational().unwrap()).collect(),
                );
                let k2 = NumberField::new(minpoly)?;
                let xi = k2.generator();
                let base = g.move_to(&k2);
                (k2, xi, base)
            } else {
                return Err(Error::UnsupportedSingularityField);
            };
            let next = blow_along_edge(&base, &k2, &xi, p, q)?;
            count += deg * branches(next, depth + 1)?;
        }
    }
    Ok(count)
}

/// `g(ξ^v X^q, X^p (ξ^u + Y)) / X^l` with `u q - v p = 1`.
fn blow_along_edge(g: &BiPoly, k: &NumberField, xi: &NumberFieldElement, p: u32, q: u32) -> Result<BiPoly> {
    let ext = (q as i64).extended_gcd(&(p as i64));
    debug_assert_eq!(ext.gcd, 1);
    let (u, v) = (ext.x, -ext.y);
    let xi_u = k.pow(xi, u).unwrap();
    let l = g.terms.keys().map(|&(i, j)| q * i + p * j).min().unwrap();
    let maxj = g.terms.keys().map(|&(_, j)| j).max().unwrap() as usize;
    let binom = binomials(maxj);
    let mut out = BiPoly { k: k.clone(), terms: BTreeMap::new() };
    for (&(i, j), c) in &g.terms {
        let base = k.mul(c, &k.pow(xi, v * i as i64).unwrap());
        let xexp = q * i + p * j - l;
        for b in 0..=j {
            let coeff = k.mul(
                &base,
                &k.mul(&k.from_int(binom[j as usize][b as usize]), &k.pow(&xi_u, (j - b) as i64).unwrap()),
            );
            out.add_term((xexp, b), coeff);
        }
    }
    if out.terms.is_empty() {
        return Err(Error::CurveNotReduced);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> std::sync::Arc<[String]> {
        MultiPoly::ring(&["x", "y"])
    }

    fn at_origin(t: &[(i64, &[u32])]) -> usize {
        branch_count(&MultiPoly::from_int_terms(&ring(), t), &AlgebraicPoint::origin()).unwrap()
    }

    #[test]
    fn classic_germs() {
        assert_eq!(at_origin(&[(1, &[0, 2]), (-1, &[3, 0])]), 1); // cusp
        assert_eq!(at_origin(&[(1, &[1, 1])]), 2); // node xy
        assert_eq!(at_origin(&[(1, &[0, 2]), (-1, &[4, 0])]), 2); // tacnode
        assert_eq!(at_origin(&[(1, &[0, 1]), (-1, &[2, 0])]), 1); // smooth
        assert_eq!(at_origin(&[(1, &[2, 1]), (1, &[1, 2])]), 3); // xy(x+y)
        assert_eq!(at_origin(&[(1, &[0, 2]), (1, &[2, 0])]), 2); // x^2+y^2 splits over ℚ(i)
    }

    #[test]
    fn recursion_through_repeated_roots() {
        // (y - x^2)^2 - x^5: one branch with two Puiseux pairs
        let one = at_origin(&[(1, &[0, 2]), (-2, &[2, 1]), (1, &[4, 0]), (-1, &[5, 0])]);
        assert_eq!(one, 1);
        // (y - x^2)^2 - x^6 = (y - x^2 - x^3)(y - x^2 + x^3): two branches
        let two = at_origin(&[(1, &[0, 2]), (-2, &[2, 1]), (1, &[4, 0]), (-1, &[6, 0])]);
        assert_eq!(two, 2);
        // (y^2 - 2 x^2)^2 - x^5 needs ℚ(√2) in the recursion
        let ext = at_origin(&[(1, &[0, 4]), (-4, &[2, 2]), (4, &[4, 0]), (-1, &[5, 0])]);
        assert_eq!(ext, 2);
    }

    #[test]
    fn non_reduced_germ_is_rejected() {
        let f = MultiPoly::from_int_terms(&ring(), &[(1, &[2, 1])]);
        assert_eq!(branch_count(&f, &AlgebraicPoint::origin()), Err(Error::CurveNotReduced));
    }
}
