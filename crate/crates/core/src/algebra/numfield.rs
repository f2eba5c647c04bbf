use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::field::{Field, RationalField};
use super::rational::{rat, Rational};
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// A simple extension ℚ(α) = ℚ[a]/(m(a)), `m` monic and irreducible over ℚ.
///
/// The degree-one field with `m = a` is ℚ itself; points and fields are handled
/// uniformly through it.
#[derive(Clone)]
pub struct NumberField {
    inner: Arc<Inner>,
}

struct Inner {
    minpoly: UPoly<Rational>,
}

impl NumberField {
    /// Builds ℚ(α). The caller guarantees irreducibility; monicity and squarefreeness
    /// are enforced here.
    pub fn new(minpoly: UPoly<Rational>) -> Result<Self> {
        let k = RationalField;
        match minpoly.degree() {
            None | Some(0) => {
                return Err(Error::Domain("minimal polynomial must be nonconstant".into()))
            }
            _ => {}
        }
        let minpoly = minpoly.monic(&k);
        if !minpoly.is_squarefree(&k) {
            return Err(Error::Domain("minimal polynomial is not squarefree".into()));
        }
        Ok(NumberField { inner: Arc::new(Inner { minpoly }) })
    }

    pub fn rationals() -> Self {
        let k = RationalField;
        NumberField {
            inner: Arc::new(Inner { minpoly: UPoly::from_coeffs(&k, vec![rat(0), rat(1)]) }),
        }
    }

    pub fn minpoly(&self) -> &UPoly<Rational> {
        &self.inner.minpoly
    }

    pub fn degree(&self) -> usize {
        self.inner.minpoly.degree().unwrap()
    }

    pub fn is_rationals(&self) -> bool {
        self.degree() == 1
    }

    pub fn same_field(&self, other: &NumberField) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.minpoly == other.inner.minpoly
    }

    /// Reduces an arbitrary polynomial in α to its canonical representative.
    pub fn element(&self, poly: UPoly<Rational>) -> NumberFieldElement {
        let coeffs = poly.rem(&RationalField, self.minpoly());
        NumberFieldElement { field: self.clone(), coeffs }
    }

    pub fn element_from_coeffs(&self, coeffs: Vec<Rational>) -> NumberFieldElement {
        self.element(UPoly::from_coeffs(&RationalField, coeffs))
    }

    /// The class of α itself.
    pub fn generator(&self) -> NumberFieldElement {
        self.element_from_coeffs(vec![rat(0), rat(1)])
    }

    pub fn embed(&self, q: &Rational) -> NumberFieldElement {
        self.element_from_coeffs(vec![q.clone()])
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other)
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rationals() {
            write!(f, "QQ")
        } else {
            write!(f, "QQ[a]/({})", upoly_to_string(self.minpoly(), "a"))
        }
    }
}

/// Element of a [`NumberField`], stored as its reduced representative of degree < deg m.
#[derive(Clone, PartialEq)]
pub struct NumberFieldElement {
    field: NumberField,
    coeffs: UPoly<Rational>,
}

impl NumberFieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        self.coeffs.coeffs()
    }

    pub fn as_poly(&self) -> &UPoly<Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Canonical representative; idempotent on already reduced elements.
    pub fn extfield_reduce(&self) -> NumberFieldElement {
        self.field.element(self.coeffs.clone())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.coeffs.coeffs()[0].clone()),
            _ => None,
        }
    }

    pub fn inverse(&self) -> Result<NumberFieldElement> {
        self.field
            .inv(self)
            .ok_or_else(|| Error::Domain("inversion of zero in a number field".into()))
    }

    /// Renders as a polynomial in `a`, e.g. `1/2 a`.
    pub fn to_poly_string(&self) -> String {
        upoly_to_string(&self.coeffs, "a")
    }
}

impl fmt::Debug for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly_string())
    }
}

impl Field for NumberField {
    type Elem = NumberFieldElement;

    fn zero(&self) -> NumberFieldElement {
        NumberFieldElement { field: self.clone(), coeffs: UPoly::zero() }
    }
    fn one(&self) -> NumberFieldElement {
        self.embed(&Rational::one())
    }
    fn is_zero(&self, a: &NumberFieldElement) -> bool {
        a.coeffs.is_zero()
    }
    fn add(&self, a: &NumberFieldElement, b: &NumberFieldElement) -> NumberFieldElement {
        NumberFieldElement { field: self.clone(), coeffs: a.coeffs.add(&RationalField, &b.coeffs) }
    }
    fn sub(&self, a: &NumberFieldElement, b: &NumberFieldElement) -> NumberFieldElement {
        NumberFieldElement { field: self.clone(), coeffs: a.coeffs.sub(&RationalField, &b.coeffs) }
    }
    fn mul(&self, a: &NumberFieldElement, b: &NumberFieldElement) -> NumberFieldElement {
        self.element(a.coeffs.mul(&RationalField, &b.coeffs))
    }
    fn neg(&self, a: &NumberFieldElement) -> NumberFieldElement {
        NumberFieldElement { field: self.clone(), coeffs: a.coeffs.neg(&RationalField) }
    }
    fn inv(&self, a: &NumberFieldElement) -> Option<NumberFieldElement> {
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = a.coeffs.ext_gcd(&RationalField, self.minpoly());
        // g = 1 because the minimal polynomial is irreducible
        debug_assert_eq!(g.degree(), Some(0));
        Some(self.element(s))
    }
    fn from_rational(&self, q: &Rational) -> NumberFieldElement {
        self.embed(q)
    }
}

pub(crate) fn upoly_to_string(p: &UPoly<Rational>, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let abs = if neg { -c } else { c.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let show_coeff = !abs.is_one() || i == 0;
        if show_coeff {
            s.push_str(&abs.to_string());
        }
        if i > 0 {
            if show_coeff {
                s.push(' ');
            }
            s.push_str(var);
            if i > 1 {
                s.push_str(&format!("^{i}"));
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt2() -> NumberField {
        NumberField::new(UPoly::from_coeffs(&RationalField, vec![rat(-2), rat(0), rat(1)])).unwrap()
    }

    #[test]
    fn square_of_generator_reduces() {
        let k = sqrt2();
        let a = k.generator();
        let a2 = k.mul(&a, &a);
        assert_eq!(a2.as_rational(), Some(rat(2)));
        let raw = k.element_from_coeffs(vec![rat(0), rat(0), rat(1)]);
        assert_eq!(raw.extfield_reduce(), k.embed(&rat(2)));
    }

    #[test]
    fn inverse_of_generator() {
        let k = sqrt2();
        let inv = k.generator().inverse().unwrap();
        // α⁻¹ = α/2
        assert_eq!(inv, k.element_from_coeffs(vec![rat(0), Rational::new(1.into(), 2.into())]));
        assert_eq!(inv.to_poly_string(), "1/2 a");
    }

    #[test]
    fn inverse_of_zero_is_domain_error() {
        let k = sqrt2();
        assert!(matches!(k.zero().inverse(), Err(Error::Domain(_))));
    }
}
