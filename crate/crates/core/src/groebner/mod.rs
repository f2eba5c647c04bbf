//! Buchberger's algorithm over ℚ: reduced Gröbner bases, normal forms, staircases,
//! quotient dimensions and elimination.
//!
//! Coefficients in a number field ℚ(α) are handled by the callers by adjoining `α` as
//! an extra variable together with its minimal polynomial.

mod order;
mod staircase;

use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{Monomial, MultiPoly, Rational};
use crate::error::{Error, Result};

pub use order::{MonomialOrder, OrderKind};
pub use staircase::{krull_dimension, quotient_dimension, standard_monomials_up_to, Staircase};

/// Default cap on the number of S-pairs treated by one Buchberger run.
pub const DEFAULT_PAIR_BUDGET: usize = 200_000;

/// A finitely generated ideal; zero generators are dropped on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal {
    vars: Arc<[String]>,
    generators: Vec<MultiPoly>,
}

impl Ideal {
    pub fn new(vars: &Arc<[String]>, generators: impl IntoIterator<Item = MultiPoly>) -> Self {
        let generators = generators
            .into_iter()
            .inspect(|g| assert_eq!(g.vars(), vars, "ideal generators must share one ring"))
            .filter(|g| !g.is_zero())
            .collect();
        Ideal { vars: vars.clone(), generators }
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant()
    }
}

/// Reduced Gröbner basis: monic, no leading monomial divides another, tails reduced.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    vars: Arc<[String]>,
    basis: Vec<MultiPoly>,
    leading: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn basis(&self) -> &[MultiPoly] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn is_unit(&self) -> bool {
        self.leading.iter().any(|m| m.is_one())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn as_ideal(&self) -> Ideal {
        Ideal::new(&self.vars, self.basis.iter().cloned())
    }
}

/// Polynomial as a list of terms sorted decreasingly for a fixed order.
type Terms = Vec<(Monomial, Rational)>;

fn to_terms(p: &MultiPoly, ord: &MonomialOrder) -> Terms {
    let mut t: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    t.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    t
}

fn from_terms(vars: &Arc<[String]>, t: Terms) -> MultiPoly {
    MultiPoly::from_terms(vars, t)
}

/// `a - c · m · b`, all sorted decreasingly.
fn sub_scaled(a: &[(Monomial, Rational)], c: &Rational, m: &Monomial, b: &[(Monomial, Rational)], ord: &MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() {
            out.push(a[i].clone());
            i += 1;
            continue;
        }
        let bm = b[j].0.mul(m);
        if i == a.len() {
            out.push((bm, -(c * &b[j].1)));
            j += 1;
            continue;
        }
        match ord.cmp(&a[i].0, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bm, -(c * &b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &a[i].1 - c * &b[j].1;
                if !v.is_zero() {
                    out.push((bm, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn make_monic(t: &mut Terms) {
    if let Some((_, lc)) = t.first() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in t.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

/// Full reduction of `p` by `basis` (each element monic).
fn reduce(p: Terms, basis: &[Terms], ord: &MonomialOrder) -> Terms {
    let mut rem: Terms = Vec::new();
    let mut cur = p;
    while !cur.is_empty() {
        let (lm, lc) = cur[0].clone();
        let divisor = basis.iter().find(|g| g[0].0.divides(&lm));
        match divisor {
            Some(g) => {
                let q = g[0].0.quotient_of(&lm).unwrap();
                cur = sub_scaled(&cur, &lc, &q, g, ord);
            }
            None => {
                rem.push(cur.remove(0));
            }
        }
    }
    rem
}

fn spoly(f: &Terms, g: &Terms, ord: &MonomialOrder) -> Terms {
    let lcm = f[0].0.lcm(&g[0].0);
    let mf = f[0].0.quotient_of(&lcm).unwrap();
    let mg = g[0].0.quotient_of(&lcm).unwrap();
    let fm: Terms = f.iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    sub_scaled(&fm, &Rational::one(), &mg, g, ord)
}

pub fn groebner_basis(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
    groebner_basis_with_budget(ideal, order, DEFAULT_PAIR_BUDGET)
}

/// Buchberger with the normal selection strategy, the product criterion and the
/// chain criterion. Aborts with [`Error::BudgetExceeded`] after `max_pairs` S-pairs.
pub fn groebner_basis_with_budget(ideal: &Ideal, order: &MonomialOrder, max_pairs: usize) -> Result<GroebnerBasis> {
    let vars = ideal.vars().clone();
    assert_eq!(order.nvars(), vars.len(), "order and ring disagree on variable count");
    let ord = order;
    let mut basis: Vec<Terms> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let mut gens: Vec<Terms> = ideal.generators().iter().map(|g| to_terms(g, ord)).collect();
    // small leading terms first keeps intermediate growth down
    gens.sort_by(|a, b| ord.cmp(&a[0].0, &b[0].0));
    for g in gens {
        let mut r = reduce(g, &basis, ord);
        if r.is_empty() {
            continue;
        }
        make_monic(&mut r);
        let idx = basis.len();
        for k in 0..idx {
            pending.insert((k, idx));
        }
        basis.push(r);
    }

    let mut treated = 0usize;
    while !pending.is_empty() {
        if basis.iter().any(|g| g[0].0.is_one()) {
            break;
        }
        // normal strategy: smallest lcm first; ties broken by indices for determinism
        let &(i, j) = pending
            .iter()
            .min_by(|&&(a, b), &&(c, d)| {
                let l1 = basis[a][0].0.lcm(&basis[b][0].0);
                let l2 = basis[c][0].0.lcm(&basis[d][0].0);
                ord.cmp(&l1, &l2).then((a, b).cmp(&(c, d)))
            })
            .unwrap();
        pending.remove(&(i, j));
        let (li, lj) = (&basis[i][0].0, &basis[j][0].0);
        if li.is_coprime(lj) {
            continue;
        }
        let lcm = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        treated += 1;
        if treated > max_pairs {
            return Err(Error::BudgetExceeded(format!("more than {max_pairs} S-pairs")));
        }
        let s = spoly(&basis[i], &basis[j], ord);
        let mut r = reduce(s, &basis, ord);
        if r.is_empty() {
            continue;
        }
        make_monic(&mut r);
        let idx = basis.len();
        for k in 0..idx {
            pending.insert((k, idx));
        }
        basis.push(r);
    }

    Ok(finish(vars, ord.clone(), basis))
}

/// Minimalizes and interreduces.
fn finish(vars: Arc<[String]>, ord: MonomialOrder, basis: Vec<Terms>) -> GroebnerBasis {
    if basis.iter().any(|g| g[0].0.is_one()) {
        let one = MultiPoly::one(&vars);
        return GroebnerBasis { order: ord, leading: vec![Monomial::one(vars.len())], basis: vec![one], vars };
    }
    let mut minimal: Vec<Terms> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i && h[0].0.divides(&g[0].0) && (h[0].0 != g[0].0 || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by(|a, b| ord.cmp(&b[0].0, &a[0].0));
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Terms> = minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        let head = minimal[i][0].clone();
        let tail = reduce(minimal[i][1..].to_vec(), &others, &ord);
        let mut g = vec![head];
        g.extend(tail);
        reduced.push(g);
    }
    let leading = reduced.iter().map(|g| g[0].0.clone()).collect();
    let basis = reduced.into_iter().map(|g| from_terms(&vars, g)).collect();
    GroebnerBasis { order: ord, vars, basis, leading }
}

/// Remainder of multivariate division by the basis; zero iff `p` lies in the ideal.
pub fn normal_form(p: &MultiPoly, gb: &GroebnerBasis) -> MultiPoly {
    assert_eq!(p.vars(), gb.vars(), "normal form across different rings");
    let basis: Vec<Terms> = gb.basis.iter().map(|g| to_terms(g, &gb.order)).collect();
    from_terms(&gb.vars, reduce(to_terms(p, &gb.order), &basis, &gb.order))
}

/// Reusable reducer for many normal forms against one basis.
pub struct Reducer<'a> {
    gb: &'a GroebnerBasis,
    basis: Vec<Terms>,
}

impl<'a> Reducer<'a> {
    pub fn new(gb: &'a GroebnerBasis) -> Self {
        let basis = gb.basis.iter().map(|g| to_terms(g, &gb.order)).collect();
        Reducer { gb, basis }
    }

    pub fn normal_form(&self, p: &MultiPoly) -> MultiPoly {
        from_terms(&self.gb.vars, reduce(to_terms(p, &self.gb.order), &self.basis, &self.gb.order))
    }
}

/// Generators of `ideal ∩ ℚ[keep]`, from a lex basis with the eliminated variables largest.
pub fn eliminate(ideal: &Ideal, keep: &[usize]) -> Result<Ideal> {
    let n = ideal.vars().len();
    let mut priority: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
    priority.extend(keep.iter().copied());
    let gb = groebner_basis(ideal, &MonomialOrder::lex_with_priority(priority))?;
    let kept = gb
        .basis
        .iter()
        .filter(|g| g.occurring_vars().iter().all(|v| keep.contains(v)))
        .cloned();
    Ok(Ideal::new(ideal.vars(), kept))
}

pub fn is_unit_ideal(polys: &[MultiPoly]) -> Result<bool> {
    let Some(first) = polys.first() else {
        return Ok(false);
    };
    let ideal = Ideal::new(first.vars(), polys.iter().cloned());
    Ok(groebner_basis(&ideal, &MonomialOrder::grevlex(first.nvars()))?.is_unit())
}

/// Greatest common divisor of two polynomials, via `lcm = (t f, (1 - t) g) ∩ ℚ[x]`.
/// Normalized primitive with positive leading coefficient.
pub fn poly_gcd(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly> {
    if f.is_zero() {
        return Ok(g.primitive());
    }
    if g.is_zero() {
        return Ok(f.primitive());
    }
    if f.is_constant() || g.is_constant() {
        return Ok(MultiPoly::one(f.vars()));
    }
    let n = f.nvars();
    let mut names: Vec<String> = f.vars().to_vec();
    names.push("_t".into());
    let ring: Arc<[String]> = names.into();
    let map: Vec<usize> = (0..n).collect();
    let fe = f.embed(&ring, &map);
    let ge = g.embed(&ring, &map);
    let t = MultiPoly::var(&ring, n);
    let one_minus_t = &MultiPoly::one(&ring) - &t;
    let ideal = Ideal::new(&ring, [&t * &fe, &one_minus_t * &ge]);
    let elim = eliminate(&ideal, &(0..n).collect::<Vec<_>>())?;
    let lcm = elim
        .generators()
        .iter()
        .min_by_key(|p| (p.total_degree(), p.num_terms()))
        .expect("lcm of nonzero polynomials")
        .clone();
    let prod = &fe * &ge;
    let gcd = prod.div_exact(&lcm).expect("lcm divides the product");
    let back: Vec<usize> = (0..n).collect();
    let gcd = MultiPoly::from_terms(
        f.vars(),
        gcd.terms().map(|(m, c)| (Monomial::new(back.iter().map(|&i| m.exps()[i]).collect()), c.clone())),
    );
    Ok(gcd.primitive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn ring() -> Arc<[String]> {
        MultiPoly::ring(&["x", "y"])
    }

    fn p(r: &Arc<[String]>, t: &[(i64, &[u32])]) -> MultiPoly {
        MultiPoly::from_int_terms(r, t)
    }

    #[test]
    fn lex_example_reduces_to_coordinates() {
        let r = ring();
        // (x^2, y - x^2) with y > x
        let ideal = Ideal::new(&r, [p(&r, &[(1, &[2, 0])]), p(&r, &[(1, &[0, 1]), (-1, &[2, 0])])]);
        let gb = groebner_basis(&ideal, &MonomialOrder::lex_with_priority(vec![1, 0])).unwrap();
        assert_eq!(gb.basis(), &[p(&r, &[(1, &[0, 1])]), p(&r, &[(1, &[2, 0])])]);
    }

    #[test]
    fn unit_and_principal_ideals() {
        let r = ring();
        let gb = groebner_basis(&Ideal::new(&r, [MultiPoly::constant(&r, rat(3))]), &MonomialOrder::grevlex(2)).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.basis(), &[MultiPoly::one(&r)]);
        let cusp = p(&r, &[(1, &[0, 2]), (-1, &[3, 0])]);
        let gb = groebner_basis(&Ideal::new(&r, [cusp.clone()]), &MonomialOrder::grevlex(2)).unwrap();
        assert_eq!(gb.basis(), &[cusp.monic()]);
    }

    #[test]
    fn normal_forms() {
        let r = ring();
        let ideal = Ideal::new(&r, [p(&r, &[(1, &[2, 0])]), p(&r, &[(1, &[0, 1])])]);
        let gb = groebner_basis(&ideal, &MonomialOrder::grevlex(2)).unwrap();
        assert!(normal_form(&p(&r, &[(1, &[3, 0])]), &gb).is_zero());
        let xp1 = p(&r, &[(1, &[1, 0]), (1, &[0, 0])]);
        assert_eq!(normal_form(&xp1, &gb), xp1);
        let cusp = Ideal::new(&r, [p(&r, &[(1, &[0, 2]), (-1, &[3, 0])])]);
        // y > x lex so that y^2 is the leading term
        let gb = groebner_basis(&cusp, &MonomialOrder::lex_with_priority(vec![1, 0])).unwrap();
        assert_eq!(normal_form(&p(&r, &[(1, &[0, 2])]), &gb), p(&r, &[(1, &[3, 0])]));
    }

    #[test]
    fn elimination_examples() {
        let r = ring();
        // (y - x^2, x - 1) ∩ ℚ[y] = (y - 1)
        let ideal = Ideal::new(&r, [p(&r, &[(1, &[0, 1]), (-1, &[2, 0])]), p(&r, &[(1, &[1, 0]), (-1, &[0, 0])])]);
        let e = eliminate(&ideal, &[1]).unwrap();
        assert_eq!(e.generators(), &[p(&r, &[(1, &[0, 1]), (-1, &[0, 0])])]);

        // critical values of y^2 - x^3: eliminate (f - t, f_x, f_y) to ℚ[t]
        let r3 = MultiPoly::ring(&["x", "y", "t"]);
        let f_t = p(&r3, &[(1, &[0, 2, 0]), (-1, &[3, 0, 0]), (-1, &[0, 0, 1])]);
        let fx = p(&r3, &[(-3, &[2, 0, 0])]);
        let fy = p(&r3, &[(2, &[0, 1, 0])]);
        let e = eliminate(&Ideal::new(&r3, [f_t, fx, fy]), &[2]).unwrap();
        assert_eq!(e.generators(), &[p(&r3, &[(1, &[0, 0, 1])])]);

        let unit = Ideal::new(&r3, [MultiPoly::one(&r3)]);
        assert!(eliminate(&unit, &[2]).unwrap().is_unit());
    }

    #[test]
    fn budget_is_enforced() {
        let r = ring();
        let ideal = Ideal::new(&r, [p(&r, &[(1, &[2, 1]), (1, &[0, 1]), (-1, &[1, 0])]), p(&r, &[(1, &[1, 2]), (-1, &[0, 0])])]);
        assert!(matches!(
            groebner_basis_with_budget(&ideal, &MonomialOrder::lex(2), 0),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn gcd_via_lcm() {
        let r = ring();
        let a = p(&r, &[(1, &[0, 1]), (-1, &[1, 0])]);
        let b = p(&r, &[(1, &[0, 1]), (1, &[1, 0])]);
        let c = p(&r, &[(1, &[2, 0]), (1, &[0, 0])]);
        let g = poly_gcd(&(&a * &b), &(&a * &c)).unwrap();
        assert_eq!(g, a.primitive());
    }
}
