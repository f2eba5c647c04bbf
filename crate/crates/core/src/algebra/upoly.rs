use super::field::Field;

/// Dense univariate polynomial, coefficients from low to high degree.
///
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
/// Arithmetic takes the coefficient field as an explicit context.
#[derive(Clone, PartialEq, Debug)]
pub struct UPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> UPoly<E> {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs<F: Field<Elem = E>>(k: &F, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| k.is_zero(c)) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn constant<F: Field<Elem = E>>(k: &F, c: E) -> Self {
        Self::from_coeffs(k, vec![c])
    }

    /// The monomial `c·T^n`.
    pub fn monomial<F: Field<Elem = E>>(k: &F, c: E, n: usize) -> Self {
        let mut v = vec![k.zero(); n];
        v.push(c);
        Self::from_coeffs(k, v)
    }

    /// `T - r`
    pub fn linear_root<F: Field<Elem = E>>(k: &F, r: &E) -> Self {
        UPoly { coeffs: vec![k.neg(r), k.one()] }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff<F: Field<Elem = E>>(&self, k: &F, i: usize) -> E {
        self.coeffs.get(i).cloned().unwrap_or_else(|| k.zero())
    }

    pub fn add<F: Field<Elem = E>>(&self, k: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| k.add(&self.coeff(k, i), &other.coeff(k, i))).collect();
        Self::from_coeffs(k, v)
    }

    pub fn sub<F: Field<Elem = E>>(&self, k: &F, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|i| k.sub(&self.coeff(k, i), &other.coeff(k, i))).collect();
        Self::from_coeffs(k, v)
    }

    pub fn neg<F: Field<Elem = E>>(&self, k: &F) -> Self {
        UPoly { coeffs: self.coeffs.iter().map(|c| k.neg(c)).collect() }
    }

    pub fn scale<F: Field<Elem = E>>(&self, k: &F, c: &E) -> Self {
        Self::from_coeffs(k, self.coeffs.iter().map(|a| k.mul(a, c)).collect())
    }

    pub fn mul<F: Field<Elem = E>>(&self, k: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] = k.add(&v[i + j], &k.mul(a, b));
            }
        }
        Self::from_coeffs(k, v)
    }

    pub fn pow<F: Field<Elem = E>>(&self, k: &F, e: u32) -> Self {
        let mut acc = Self::constant(k, k.one());
        for _ in 0..e {
            acc = acc.mul(k, self);
        }
        acc
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn divrem<F: Field<Elem = E>>(&self, k: &F, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = k.inv(divisor.lead().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![k.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = k.mul(&rem[i + dd], &lead_inv);
            if k.is_zero(&c) {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = k.sub(&rem[i + j], &k.mul(&c, d));
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(k, quot), Self::from_coeffs(k, rem))
    }

    pub fn rem<F: Field<Elem = E>>(&self, k: &F, divisor: &Self) -> Self {
        self.divrem(k, divisor).1
    }

    /// Exact quotient, `None` if the division leaves a remainder.
    pub fn div_exact<F: Field<Elem = E>>(&self, k: &F, divisor: &Self) -> Option<Self> {
        let (q, r) = self.divrem(k, divisor);
        r.is_zero().then_some(q)
    }

    pub fn monic<F: Field<Elem = E>>(&self, k: &F) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => self.scale(k, &k.inv(l).unwrap()),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd<F: Field<Elem = E>>(&self, k: &F, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(k, &b);
            a = b;
            b = r;
        }
        a.monic(k)
    }

    /// Returns `(g, s, t)` with `g = s·self + t·other`, `g` monic.
    pub fn ext_gcd<F: Field<Elem = E>>(&self, k: &F, other: &Self) -> (Self, Self, Self) {
        let one = Self::constant(k, k.one());
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), one);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(k, &r1);
            let s = s0.sub(k, &q.mul(k, &s1));
            let t = t0.sub(k, &q.mul(k, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = k.inv(&l).unwrap();
                (r0.scale(k, &li), s0.scale(k, &li), t0.scale(k, &li))
            }
        }
    }

    pub fn derivative<F: Field<Elem = E>>(&self, k: &F) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| k.mul(c, &k.from_int(i as i64)))
            .collect();
        Self::from_coeffs(k, v)
    }

    pub fn eval<F: Field<Elem = E>>(&self, k: &F, x: &E) -> E {
        self.coeffs.iter().rev().fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
    }

    /// `self(inner(T))`
    pub fn compose<F: Field<Elem = E>>(&self, k: &F, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            acc.mul(k, inner).add(k, &Self::constant(k, c.clone()))
        })
    }

    pub fn is_squarefree<F: Field<Elem = E>>(&self, k: &F) -> bool {
        self.gcd(k, &self.derivative(k)).degree() == Some(0)
    }

    /// Yun's squarefree decomposition of a nonzero polynomial: monic, pairwise coprime
    /// squarefree `(a_i, i)` with `self = lc · Π a_i^i`. Only nonconstant parts are listed.
    pub fn squarefree_decomposition<F: Field<Elem = E>>(&self, k: &F) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic(k);
        let fp = f.derivative(k);
        let a0 = f.gcd(k, &fp);
        let mut b = f.div_exact(k, &a0).unwrap();
        let mut c = fp.div_exact(k, &a0).unwrap();
        let mut d = c.sub(k, &b.derivative(k));
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(k, &d);
            b = b.div_exact(k, &a).unwrap();
            c = d.div_exact(k, &a).unwrap();
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            d = c.sub(k, &b.derivative(k));
            i += 1;
        }
        out
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part<F: Field<Elem = E>>(&self, k: &F) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(k, &self.derivative(k));
        self.div_exact(k, &g).unwrap().monic(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::RationalField;
    use crate::algebra::rational::{rat, Rational};

    fn p(c: &[i64]) -> UPoly<Rational> {
        UPoly::from_coeffs(&RationalField, c.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let k = RationalField;
        let a = p(&[-1, 0, 1]); // x^2-1
        let b = p(&[1, 1]); // x+1
        let (q, r) = a.divrem(&k, &b);
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&k, &p(&[-1, 1, 0, 0])), p(&[-1, 1]));
        let (g, s, t) = p(&[-2, 0, 1]).ext_gcd(&k, &p(&[0, 1]));
        assert_eq!(g, p(&[1]));
        assert_eq!(s.mul(&k, &p(&[-2, 0, 1])).add(&k, &t.mul(&k, &p(&[0, 1]))), p(&[1]));
    }

    #[test]
    fn yun_decomposition() {
        let k = RationalField;
        // x^3 - x^2 = x^2 (x-1)
        let f = p(&[0, 0, -1, 1]);
        let d = f.squarefree_decomposition(&k);
        assert_eq!(d, vec![(p(&[-1, 1]), 1), (p(&[0, 1]), 2)]);
        assert_eq!(f.squarefree_part(&k), p(&[0, -1, 1]));
    }

    #[test]
    fn composition() {
        let k = RationalField;
        // (x^2)(x+1) = x^2+2x+1
        assert_eq!(p(&[0, 0, 1]).compose(&k, &p(&[1, 1])), p(&[1, 2, 1]));
    }
}
