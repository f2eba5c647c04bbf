use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::RationalField;
use super::monomial::Monomial;
use super::rational::Rational;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept in graded reverse lexicographic order (the `Ord` of [`Monomial`]);
/// zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &Arc<[String]>) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<[String]>, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &Arc<[String]>) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn var(vars: &Arc<[String]>, i: usize) -> Self {
        Self::term(vars, Monomial::var(vars.len(), i), Rational::one())
    }

    pub fn term(vars: &Arc<[String]>, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), vars.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(vars: &Arc<[String]>, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Convenience constructor for tests and fixtures: `(coefficient, exponents)` pairs.
    pub fn from_int_terms(vars: &Arc<[String]>, terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(
            vars,
            terms
                .iter()
                .map(|(c, e)| (Monomial::new(e.to_vec()), Rational::from_integer(BigInt::from(*c)))),
        )
    }

    pub fn ring(names: &[&str]) -> Arc<[String]> {
        names.iter().map(|s| s.to_string()).collect::<Vec<_>>().into()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing grevlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.coefficient(&Monomial::one(self.nvars())))
        } else {
            None
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exps()[i]).max()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u32> {
        self.terms.keys().map(|m| m.weighted_degree(weights)).max()
    }

    pub fn is_weighted_homogeneous(&self, weights: &[u32]) -> bool {
        let mut it = self.terms.keys().map(|m| m.weighted_degree(weights));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Indices of variables that actually occur.
    pub fn occurring_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.terms.keys().any(|m| m.exps()[i] > 0)).collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(t, v)| (t.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut n = e;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exps()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[i] -= 1;
            out.add_term(Monomial::new(exps), c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Substitutes `images[i]` for variable `i`; all images must share one ring, which
    /// becomes the ring of the result.
    pub fn substitute(&self, images: &[MultiPoly]) -> Self {
        assert_eq!(images.len(), self.nvars());
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![MultiPoly::one(&p.vars)]).collect();
        let mut out = MultiPoly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Replaces variable `i` by the rational `value`, keeping the ring.
    pub fn eval_var(&self, i: usize, value: &Rational) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut exps = m.exps().to_vec();
            let e = exps[i];
            exps[i] = 0;
            let mut v = c.clone();
            for _ in 0..e {
                v *= value;
            }
            out.add_term(Monomial::new(exps), v);
        }
        out
    }

    /// Re-embeds into another ring: variable `i` of `self` becomes variable `index_map[i]`.
    pub fn embed(&self, target: &Arc<[String]>, index_map: &[usize]) -> Self {
        let n = target.len();
        MultiPoly::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; n];
                for (i, &x) in m.exps().iter().enumerate() {
                    e[index_map[i]] += x;
                }
                (Monomial::new(e), c.clone())
            }),
        )
    }

    /// Re-embeds by variable names; panics if a variable of `self` is missing in `target`
    /// while occurring in some term.
    pub fn embed_by_name(&self, target: &Arc<[String]>) -> Self {
        let map: Vec<usize> = self
            .vars
            .iter()
            .enumerate()
            .map(|(i, v)| {
                target.iter().position(|t| t == v).unwrap_or_else(|| {
                    assert!(self.degree_in(i).unwrap_or(0) == 0, "variable {v} missing in target ring");
                    0
                })
            })
            .collect();
        self.embed(target, &map)
    }

    /// Dense univariate view when only variable `i` occurs.
    pub fn to_univariate(&self, i: usize) -> Option<UPoly<Rational>> {
        let mut coeffs = vec![Rational::zero(); self.degree_in(i).unwrap_or(0) as usize + 1];
        for (m, c) in &self.terms {
            if m.exps().iter().enumerate().any(|(j, &e)| j != i && e > 0) {
                return None;
            }
            coeffs[m.exps()[i] as usize] = c.clone();
        }
        Some(UPoly::from_coeffs(&RationalField, coeffs))
    }

    pub fn from_univariate(vars: &Arc<[String]>, i: usize, p: &UPoly<Rational>) -> Self {
        MultiPoly::from_terms(
            vars,
            p.coeffs().iter().enumerate().map(|(k, c)| {
                let mut e = vec![0; vars.len()];
                e[i] = k as u32;
                (Monomial::new(e), c.clone())
            }),
        )
    }

    /// Coefficients as a polynomial in variable `i`: entry `k` multiplies `x_i^k`.
    pub fn coefficients_in(&self, i: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(i).unwrap_or(0) as usize;
        let mut out = vec![MultiPoly::zero(&self.vars); d + 1];
        for (m, c) in &self.terms {
            let mut e = m.exps().to_vec();
            let k = e[i] as usize;
            e[i] = 0;
            out[k].add_term(Monomial::new(e), c.clone());
        }
        out
    }

    /// Homogenizes with respect to the ring's last variable, which must not occur.
    pub fn homogenize_last(&self) -> Self {
        let n = self.nvars();
        let d = self.total_degree().unwrap_or(0);
        MultiPoly::from_terms(
            &self.vars,
            self.terms.iter().map(|(m, c)| {
                let mut e = m.exps().to_vec();
                debug_assert_eq!(e[n - 1], 0);
                e[n - 1] = d - m.degree();
                (Monomial::new(e), c.clone())
            }),
        )
    }

    /// Sum of the terms of top total degree.
    pub fn top_form(&self) -> Self {
        let d = self.total_degree().unwrap_or(0);
        MultiPoly::from_terms(
            &self.vars,
            self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Scales to integer coefficients with content 1 and a positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut factor = Rational::new(den_lcm, num_gcd);
        if self.leading_term().unwrap().1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Exact quotient by a nonzero divisor, `None` when it does not divide.
    ///
    /// A single polynomial is a Gröbner basis of its principal ideal, so plain division
    /// by leading terms decides divisibility.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = divisor.leading_term().expect("division by zero polynomial");
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(&self.vars);
        while let Some((m, c)) = rem.leading_term() {
            let q = lm.quotient_of(m)?;
            let qc = c / &lc;
            rem = &rem - &divisor.mul_monomial(&q, &qc);
            quot.add_term(q, qc);
        }
        Some(quot)
    }

    /// Formats with explicit variable names.
    pub fn to_expr_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (m, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut parts = Vec::new();
            if !abs.is_one() || m.is_one() {
                parts.push(abs.to_string());
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(self.vars[i].clone()),
                    _ => parts.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            s.push_str(&parts.join(" "));
        }
        s
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr_string())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self.to_expr_string())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.vars, rhs.vars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.vars, rhs.vars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.vars, rhs.vars);
        let mut out = MultiPoly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

/// `f / gcd(f, ∂f/∂x_1, …, ∂f/∂x_n)`, primitive with positive leading coefficient.
pub fn squarefree_part(f: &MultiPoly) -> Result<MultiPoly> {
    if f.is_zero() {
        return Err(Error::Domain("squarefree part of the zero polynomial".into()));
    }
    let mut g = f.clone();
    for i in 0..f.nvars() {
        let d = f.derivative(i);
        if d.is_zero() {
            continue;
        }
        g = crate::groebner::poly_gcd(&g, &d)?;
        if g.is_constant() {
            break;
        }
    }
    let q = f.div_exact(&g).expect("gcd divides its argument");
    Ok(q.primitive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn xy() -> Arc<[String]> {
        MultiPoly::ring(&["x", "y"])
    }

    #[test]
    fn arithmetic_and_display() {
        let r = xy();
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let f = &(&y * &y) - &x.pow(3);
        assert_eq!(f.to_string(), "-x^3 + y^2");
        assert_eq!(f.derivative(0).to_string(), "-3 x^2");
        let g = &(&y - &x) * &(&y + &x);
        assert_eq!(g.to_string(), "-x^2 + y^2");
        assert_eq!(g.div_exact(&(&y - &x)), Some(&y + &x));
        assert_eq!(g.div_exact(&x), None);
    }

    #[test]
    fn substitution_and_coefficients() {
        let r = xy();
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let f = &(&y * &y) - &x.pow(3);
        let one = MultiPoly::one(&r);
        let g = f.substitute(&[&x + &one, y.clone()]);
        assert_eq!(g.eval_var(0, &rat(-1)), &(&y * &y) - &MultiPoly::zero(&r));
        let c = f.coefficients_in(1);
        assert_eq!(c.len(), 3);
        assert_eq!(c[2], one);
        let r3 = MultiPoly::ring(&["x", "y", "z"]);
        let h = f.embed(&r3, &[0, 1]).homogenize_last();
        assert_eq!(h.to_string(), "-x^3 + y^2 z");
    }

    #[test]
    fn squarefree_parts() {
        let r = xy();
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let f = &x.pow(2) * &y.pow(3);
        assert_eq!(squarefree_part(&f).unwrap(), &x * &y);
        let cusp = &y.pow(2) - &x.pow(3);
        assert_eq!(squarefree_part(&cusp).unwrap(), cusp.primitive());
        let g = &(&y - &x).pow(2) * &(&y + &x);
        assert_eq!(squarefree_part(&g).unwrap(), (&(&y - &x) * &(&y + &x)).primitive());
    }
}
