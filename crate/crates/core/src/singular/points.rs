use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{
    factor_over_number_field, factor_univariate, rat, Field, MultiPoly, NumberField, NumberFieldElement, Rational,
    UPoly,
};
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, quotient_dimension, Ideal, MonomialOrder};

/// One Galois orbit of points of ℂ², represented by a single point over ℚ(α).
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraicPoint {
    pub field: NumberField,
    pub coords: [NumberFieldElement; 2],
    /// Number of ℂ-conjugates: the degree of the field.
    pub orbit_size: usize,
}

impl AlgebraicPoint {
    pub fn rational(x: Rational, y: Rational) -> Self {
        let k = NumberField::rationals();
        AlgebraicPoint { coords: [k.embed(&x), k.embed(&y)], field: k, orbit_size: 1 }
    }

    pub fn origin() -> Self {
        Self::rational(Rational::zero(), Rational::zero())
    }

    pub fn is_rational(&self) -> bool {
        self.field.is_rationals()
    }

    /// Rational coordinates, when the point is defined over ℚ.
    pub fn rational_coords(&self) -> Option<(Rational, Rational)> {
        Some((self.coords[0].as_rational()?, self.coords[1].as_rational()?))
    }
}

/// Evaluates a bivariate polynomial at a point over a number field.
pub fn eval_at(f: &MultiPoly, k: &NumberField, pt: &[NumberFieldElement]) -> NumberFieldElement {
    let mut acc = k.zero();
    for (m, c) in f.terms() {
        let mut t = k.embed(c);
        for (i, &e) in m.exps().iter().enumerate() {
            for _ in 0..e {
                t = k.mul(&t, &pt[i]);
            }
        }
        acc = k.add(&acc, &t);
    }
    acc
}

/// All common zeros of a zero-dimensional system in two variables, grouped into Galois
/// orbits. Falls back to sheared coordinates `u = x + c·y` when the y-coordinates over
/// the field of an x-coordinate would need a second extension.
pub fn solve_zero_dimensional(polys: &[MultiPoly]) -> Result<Vec<AlgebraicPoint>> {
    assert!(!polys.is_empty());
    assert_eq!(polys[0].nvars(), 2, "solver works in two variables");
    for shear in [0i64, 1, 2, -1, 3, 5, -7] {
        match try_solve(polys, shear) {
            Err(Error::UnsupportedPointField) => continue,
            other => return other,
        }
    }
    Err(Error::UnsupportedPointField)
}

fn try_solve(polys: &[MultiPoly], shear: i64) -> Result<Vec<AlgebraicPoint>> {
    let vars: Arc<[String]> = polys[0].vars().clone();
    let x = MultiPoly::var(&vars, 0);
    let y = MultiPoly::var(&vars, 1);
    let polys: Vec<MultiPoly> = if shear == 0 {
        polys.to_vec()
    } else {
        // coordinates (u, y) with u = x + c y, i.e. x = u - c y
        let xs = &x - &y.scale(&rat(shear));
        polys.iter().map(|p| p.substitute(&[xs.clone(), y.clone()])).collect()
    };
    let ideal = Ideal::new(&vars, polys.iter().cloned());
    let gb = groebner_basis(&ideal, &MonomialOrder::lex_with_priority(vec![1, 0]))?;
    if gb.is_unit() {
        return Ok(Vec::new());
    }
    if !quotient_dimension(&gb).is_finite() {
        return Err(Error::Domain("polynomial system is not zero-dimensional".into()));
    }
    let eliminant = gb
        .basis()
        .iter()
        .find(|g| g.occurring_vars() == [0])
        .expect("zero-dimensional lex basis contains an eliminant")
        .clone();

    let mut out = Vec::new();
    for (h, _) in factor_univariate(&eliminant)? {
        let hu = h.to_univariate(0).unwrap();
        let (k, uval) = if hu.degree() == Some(1) {
            let k = NumberField::rationals();
            let root = -(&hu.coeffs()[0] / &hu.coeffs()[1]);
            let r = k.embed(&root);
            (k, r)
        } else {
            let k = NumberField::new(hu)?;
            let a = k.generator();
            (k, a)
        };
        // gcd over K of the basis elements specialized at x = root
        let mut g: UPoly<NumberFieldElement> = UPoly::zero();
        for b in gb.basis() {
            let spec = specialize_first(b, &k, &uval);
            g = g.gcd(&k, &spec);
        }
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = g.squarefree_part(&k);
        for (phi, _) in factor_over_number_field(&k, &g)? {
            let c_shear = k.from_int(shear);
            if phi.degree() == Some(1) {
                let beta = k.neg(&k.div(&phi.coeffs()[0], &phi.coeffs()[1]).unwrap());
                let xval = k.sub(&uval, &k.mul(&c_shear, &beta));
                out.push(AlgebraicPoint { orbit_size: k.degree(), coords: [xval, beta], field: k.clone() });
            } else if k.is_rationals() {
                let minpoly = UPoly::from_coeffs(
                    &crate::algebra::RationalField,
                    phi.coeffs().iter().map(|c| c.as_rational().unwrap()).collect(),
                );
                let k2 = NumberField::new(minpoly)?;
                let beta = k2.generator();
                let u2 = k2.embed(&uval.as_rational().unwrap());
                let xval = k2.sub(&u2, &k2.mul(&k2.from_int(shear), &beta));
                out.push(AlgebraicPoint { orbit_size: k2.degree(), coords: [xval, beta], field: k2 });
            } else {
                return Err(Error::UnsupportedPointField);
            }
        }
    }
    Ok(out)
}

/// Substitutes the field element `value` for variable 0 and returns a polynomial in variable 1.
pub(crate) fn specialize_first(b: &MultiPoly, k: &NumberField, value: &NumberFieldElement) -> UPoly<NumberFieldElement> {
    let deg = b.degree_in(1).unwrap_or(0) as usize;
    let mut coeffs = vec![k.zero(); deg + 1];
    for (m, c) in b.terms() {
        let (i, j) = (m.exps()[0], m.exps()[1] as usize);
        let v = k.mul(&k.embed(c), &k.pow(value, i as i64).unwrap());
        coeffs[j] = k.add(&coeffs[j], &v);
    }
    UPoly::from_coeffs(k, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<[String]> {
        MultiPoly::ring(&["x", "y"])
    }

    #[test]
    fn rational_and_conjugate_points() {
        let r = ring();
        // x^2 - 2 = 0, y - x = 0: one orbit of size 2
        let p1 = MultiPoly::from_int_terms(&r, &[(1, &[2, 0]), (-2, &[0, 0])]);
        let p2 = MultiPoly::from_int_terms(&r, &[(1, &[0, 1]), (-1, &[1, 0])]);
        let pts = solve_zero_dimensional(&[p1.clone(), p2.clone()]).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].orbit_size, 2);
        for p in [&p1, &p2] {
            assert!(eval_at(p, &pts[0].field, &pts[0].coords).is_zero());
        }
        // x = 0, y^2 = 2: rational x, quadratic y
        let q1 = MultiPoly::from_int_terms(&r, &[(1, &[1, 0])]);
        let q2 = MultiPoly::from_int_terms(&r, &[(1, &[0, 2]), (-2, &[0, 0])]);
        let pts = solve_zero_dimensional(&[q1, q2]).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].orbit_size, 2);
    }

    #[test]
    fn tower_requires_shear() {
        let r = ring();
        // x^2 = 2, y^2 = 3: four points over ℚ(√2, √3); sheared coordinates give one orbit
        let p1 = MultiPoly::from_int_terms(&r, &[(1, &[2, 0]), (-2, &[0, 0])]);
        let p2 = MultiPoly::from_int_terms(&r, &[(1, &[0, 2]), (-3, &[0, 0])]);
        let pts = solve_zero_dimensional(&[p1.clone(), p2.clone()]).unwrap();
        let total: usize = pts.iter().map(|p| p.orbit_size).sum();
        assert_eq!(total, 4);
        for pt in &pts {
            assert!(eval_at(&p1, &pt.field, &pt.coords).is_zero());
            assert!(eval_at(&p2, &pt.field, &pt.coords).is_zero());
        }
    }
}
