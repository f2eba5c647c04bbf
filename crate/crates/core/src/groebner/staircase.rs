use std::collections::HashSet;

use super::GroebnerBasis;
use crate::algebra::Monomial;

/// Monomials outside the leading-term ideal: a basis of the quotient algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    pub leading_monomials: Vec<Monomial>,
    /// `None` when the quotient is infinite-dimensional.
    pub standard_monomials: Option<Vec<Monomial>>,
}

impl Staircase {
    pub fn dimension(&self) -> Option<usize> {
        self.standard_monomials.as_ref().map(Vec::len)
    }

    pub fn is_finite(&self) -> bool {
        self.standard_monomials.is_some()
    }
}

fn is_standard(m: &Monomial, lms: &[Monomial]) -> bool {
    !lms.iter().any(|l| l.divides(m))
}

/// Finite iff a pure power of every variable is a leading monomial.
pub fn quotient_dimension(gb: &GroebnerBasis) -> Staircase {
    let n = gb.vars().len();
    let lms = gb.leading_monomials().to_vec();
    let finite = (0..n).all(|i| lms.iter().any(|m| m.pure_power_var() == Some(i)))
        || lms.iter().any(|m| m.is_one());
    let standard = finite.then(|| {
        let mut seen = HashSet::new();
        let mut stack = vec![Monomial::one(n)];
        let mut out = Vec::new();
        while let Some(m) = stack.pop() {
            if !seen.insert(m.clone()) || !is_standard(&m, &lms) {
                continue;
            }
            for i in 0..n {
                stack.push(m.mul(&Monomial::var(n, i)));
            }
            out.push(m);
        }
        out.sort();
        out
    });
    Staircase { leading_monomials: lms, standard_monomials: standard }
}

/// Standard monomials of weighted degree at most `max_degree`, sorted by that degree
/// then grevlex.
pub fn standard_monomials_up_to(lms: &[Monomial], weights: &[u32], max_degree: u32) -> Vec<Monomial> {
    let n = weights.len();
    let mut seen = HashSet::new();
    let mut stack = vec![Monomial::one(n)];
    let mut out = Vec::new();
    while let Some(m) = stack.pop() {
        if m.weighted_degree(weights) > max_degree || !seen.insert(m.clone()) || !is_standard(&m, lms) {
            continue;
        }
        for i in 0..n {
            stack.push(m.mul(&Monomial::var(n, i)));
        }
        out.push(m);
    }
    out.sort_by(|a, b| a.weighted_degree(weights).cmp(&b.weighted_degree(weights)).then(a.cmp(b)));
    out
}

/// Krull dimension of the quotient: the largest set of variables carrying no leading
/// monomial entirely.
pub fn krull_dimension(lms: &[Monomial], nvars: usize) -> Option<usize> {
    if lms.iter().any(|m| m.is_one()) {
        return None;
    }
    let mut best = 0;
    for mask in 0u32..(1 << nvars) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let inside = |m: &Monomial| m.exps().iter().enumerate().all(|(i, &e)| e == 0 || mask & (1 << i) != 0);
        if !lms.iter().any(inside) {
            best = size;
        }
    }
    Some(best)
}
