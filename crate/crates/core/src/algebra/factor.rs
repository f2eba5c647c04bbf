//! Univariate factorization over ℚ (Zassenhaus: modular factorization, Hensel lifting,
//! subset recombination) and over simple extensions ℚ(α) (Trager's norm method).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{Field, RationalField};
use super::modp::{PolyP, Zp};
use super::numfield::{NumberField, NumberFieldElement};
use super::poly::MultiPoly;
use super::rational::Rational;
use super::resultant::resultant;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Largest squarefree degree handed to the Zassenhaus routine.
pub const DEGREE_CAP: usize = 32;

type IntPoly = Vec<BigInt>;

/// Factors a univariate polynomial (at most one variable occurring) over ℚ.
///
/// Factors are monic, irreducible over ℚ and returned with multiplicities; their
/// product equals `f` up to a rational constant.
pub fn factor_univariate(f: &MultiPoly) -> Result<Vec<(MultiPoly, usize)>> {
    if f.is_zero() {
        return Err(Error::Domain("factorization of the zero polynomial".into()));
    }
    let occ = f.occurring_vars();
    if occ.len() > 1 {
        return Err(Error::Domain("factor_univariate needs a univariate polynomial".into()));
    }
    let Some(&var) = occ.first() else {
        return Ok(Vec::new());
    };
    let u = f.to_univariate(var).unwrap();
    Ok(factor_univariate_poly(&u)?
        .into_iter()
        .map(|(g, e)| (MultiPoly::from_univariate(f.vars(), var, &g), e))
        .collect())
}

/// Dense counterpart of [`factor_univariate`].
pub fn factor_univariate_poly(f: &UPoly<Rational>) -> Result<Vec<(UPoly<Rational>, usize)>> {
    let k = RationalField;
    if f.is_zero() {
        return Err(Error::Domain("factorization of the zero polynomial".into()));
    }
    let mut out = Vec::new();
    for (part, mult) in f.squarefree_decomposition(&k) {
        let deg = part.degree().unwrap();
        if deg > DEGREE_CAP {
            return Err(Error::DegreeCapExceeded { degree: deg, cap: DEGREE_CAP });
        }
        for g in zassenhaus(&to_primitive_int(&part)) {
            out.push((from_int(&g).monic(&k), mult));
        }
    }
    sort_factors(&mut out);
    Ok(out)
}

fn sort_factors(v: &mut [(UPoly<Rational>, usize)]) {
    v.sort_by(|(a, ea), (b, eb)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
            .then(ea.cmp(eb))
    });
}

fn to_primitive_int(p: &UPoly<Rational>) -> IntPoly {
    let den = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut v: IntPoly = p.coeffs().iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    for c in &mut v {
        *c = &*c / &content;
    }
    if v.last().unwrap().is_negative() {
        for c in &mut v {
            *c = -&*c;
        }
    }
    v
}

fn from_int(p: &IntPoly) -> UPoly<Rational> {
    UPoly::from_coeffs(&RationalField, p.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

fn reduce_mod_p(f: &IntPoly, p: u64) -> PolyP {
    let pb = BigInt::from(p);
    let v: PolyP = f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    Zp::new(p).trim(v)
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Factors a primitive squarefree integer polynomial with positive leading coefficient.
fn zassenhaus(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    // pick the prime with the fewest modular factors among a few good ones
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(u64, Vec<PolyP>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        let lc = f.last().unwrap();
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let z = Zp::new(p);
        let fp = reduce_mod_p(f, p);
        if !z.is_squarefree(&fp) {
            continue;
        }
        let facs = z.factor_squarefree(&fp, &mut rng);
        if facs.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (p, facs) = best.unwrap();

    // coefficient bound for any factor, times the leading coefficient
    let maxc = f.iter().map(|c| c.abs()).max().unwrap();
    let bound: BigInt = (BigInt::one() << n) * BigInt::from(n + 1) * maxc * f.last().unwrap().abs();
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut k = 1u32;
    while modulus <= &bound * 2 {
        modulus *= &pb;
        k += 1;
    }
    let lifted = multi_lift(f, &facs, p, k);
    recombine(f.clone(), lifted, &modulus)
}

fn pmod(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

fn trim_int(mut v: IntPoly) -> IntPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_mod(a: &IntPoly, m: &BigInt) -> IntPoly {
    trim_int(a.iter().map(|c| pmod(c, m)).collect())
}

fn int_add(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim_int((0..n).map(|i| pmod(&(a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)), m)).collect())
}

fn int_sub(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim_int((0..n).map(|i| pmod(&(a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)), m)).collect())
}

fn int_mul(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    poly_mod(&v, m)
}

/// Division by a monic polynomial modulo `m`.
fn int_divrem_monic(a: &IntPoly, b: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    let db = b.len() - 1;
    let mut r = poly_mod(a, m);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = pmod(&r[i + db], m);
        if c.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] = pmod(&(&r[i + j] - &c * y), m);
        }
        q[i] = c;
    }
    r.truncate(db);
    (trim_int(q), trim_int(r))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = pmod(a, m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    pmod(&e.x, m)
}

fn to_int(v: &PolyP) -> IntPoly {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: from `f ≡ g h`, `s g + t h ≡ 1 (mod m)` to the same
/// relations modulo `m²`. `h` is monic.
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let m2 = m * m;
    let e = int_sub(f, &int_mul(g, h, &m2), &m2);
    let (q, r) = int_divrem_monic(&int_mul(s, &e, &m2), h, &m2);
    let g2 = int_add(&int_add(g, &int_mul(t, &e, &m2), &m2), &int_mul(&q, g, &m2), &m2);
    let h2 = int_add(h, &r, &m2);
    let b = int_sub(
        &int_add(&int_mul(s, &g2, &m2), &int_mul(t, &h2, &m2), &m2),
        &vec![BigInt::one()],
        &m2,
    );
    let (c, d) = int_divrem_monic(&int_mul(s, &b, &m2), &h2, &m2);
    let s2 = int_sub(s, &d, &m2);
    let t2 = int_sub(&int_sub(t, &int_mul(t, &b, &m2), &m2), &int_mul(&c, &g2, &m2), &m2);
    (g2, h2, s2, t2)
}

/// Lifts the monic modular factors of `f` to monic factors modulo `p^k` whose product
/// is `f / lc(f)` modulo `p^k`.
fn multi_lift(f: &IntPoly, facs: &[PolyP], p: u64, k: u32) -> Vec<IntPoly> {
    let pb = BigInt::from(p);
    let target = pb.pow(k);
    let f = poly_mod(f, &target);
    if facs.len() == 1 {
        let li = mod_inverse(f.last().unwrap(), &target);
        return vec![poly_mod(&f.iter().map(|c| c * &li).collect(), &target)];
    }
    let z = Zp::new(p);
    let mid = facs.len() / 2;
    let (left, right) = facs.split_at(mid);
    let lc_p = reduce_mod_p(&vec![f.last().unwrap().clone()], p);
    let g0 = left.iter().fold(lc_p, |acc, x| z.mul(&acc, x));
    let h0 = right.iter().fold(vec![1u64], |acc, x| z.mul(&acc, x));
    let (one, s0, t0) = z.ext_gcd(&g0, &h0);
    debug_assert_eq!(one, vec![1]);
    let (mut g, mut h, mut s, mut t) = (to_int(&g0), to_int(&h0), to_int(&s0), to_int(&t0));
    let mut m = pb.clone();
    let mut e = 1u32;
    while e < k {
        let fm = poly_mod(&f, &(&m * &m));
        (g, h, s, t) = hensel_step(&fm, &g, &h, &s, &t, &m);
        m = &m * &m;
        e *= 2;
    }
    let g = poly_mod(&g, &target);
    let h = poly_mod(&h, &target);
    let mut out = multi_lift(&g, left, p, k);
    out.extend(multi_lift(&h, right, p, k));
    out
}

fn symmetric(a: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    a.iter()
        .map(|c| {
            let c = pmod(c, m);
            if c > half {
                c - m
            } else {
                c
            }
        })
        .collect()
}

fn primitive_int(v: &IntPoly) -> IntPoly {
    to_primitive_int(&from_int(v))
}

/// Trial division over ℤ; `Some(quotient)` when exact.
fn int_divides(f: &IntPoly, g: &IntPoly) -> Option<IntPoly> {
    let k = RationalField;
    let (q, r) = from_int(f).divrem(&k, &from_int(g));
    if !r.is_zero() || q.coeffs().iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(q.coeffs().iter().map(|c| c.to_integer()).collect())
}

fn recombine(mut f: IntPoly, mut lifted: Vec<IntPoly>, modulus: &BigInt) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        for subset in combinations(lifted.len(), size) {
            let lc = f.last().unwrap().clone();
            let mut g = vec![lc.clone()];
            for &i in &subset {
                g = int_mul(&g, &lifted[i], modulus);
            }
            let g = primitive_int(&trim_int(symmetric(&g, modulus)));
            if g.len() < 2 {
                continue;
            }
            if let Some(q) = int_divides(&f, &g) {
                out.push(g);
                f = primitive_int(&q);
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    if f.len() > 1 {
        out.push(f);
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Factors a nonzero polynomial over ℚ(α) into monic irreducibles with multiplicities.
pub fn factor_over_number_field(
    k: &NumberField,
    f: &UPoly<NumberFieldElement>,
) -> Result<Vec<(UPoly<NumberFieldElement>, usize)>> {
    if f.is_zero() {
        return Err(Error::Domain("factorization of the zero polynomial".into()));
    }
    if k.is_rationals() {
        let q = UPoly::from_coeffs(
            &RationalField,
            f.coeffs().iter().map(|c| c.as_rational().unwrap()).collect(),
        );
        return Ok(factor_univariate_poly(&q)?
            .into_iter()
            .map(|(g, e)| (embed_rational_poly(k, &g), e))
            .collect());
    }
    let mut out = Vec::new();
    for (part, mult) in f.squarefree_decomposition(k) {
        for g in trager_squarefree(k, &part)? {
            out.push((g, mult));
        }
    }
    Ok(out)
}

pub(crate) fn embed_rational_poly(k: &NumberField, g: &UPoly<Rational>) -> UPoly<NumberFieldElement> {
    UPoly::from_coeffs(k, g.coeffs().iter().map(|c| k.embed(c)).collect())
}

/// Norm of `q(T) ∈ ℚ(α)[T]` down to ℚ[T], as `Res_a(m(a), Q(T, a))`.
pub(crate) fn norm(k: &NumberField, q: &UPoly<NumberFieldElement>) -> Result<UPoly<Rational>> {
    let ring = MultiPoly::ring(&["T", "a"]);
    let mut big = MultiPoly::zero(&ring);
    for (i, c) in q.coeffs().iter().enumerate() {
        for (j, r) in c.coeffs().iter().enumerate() {
            big.add_term(super::monomial::Monomial::new(vec![i as u32, j as u32]), r.clone());
        }
    }
    let m = MultiPoly::from_univariate(&ring, 1, k.minpoly());
    let res = resultant(&m, &big, 1)?;
    Ok(res.to_univariate(0).expect("norm is univariate in T"))
}

fn trager_squarefree(k: &NumberField, p: &UPoly<NumberFieldElement>) -> Result<Vec<UPoly<NumberFieldElement>>> {
    if p.degree() == Some(1) {
        return Ok(vec![p.monic(k)]);
    }
    let alpha = k.generator();
    let t = UPoly::from_coeffs(k, vec![k.zero(), k.one()]);
    for shift in [0i64, 1, -1, 2, -2, 3, -3, 4, -4, 5] {
        let sa = k.mul(&k.from_int(shift), &alpha);
        // q(T) = p(T - s α)
        let q = p.compose(k, &t.sub(k, &UPoly::constant(k, sa.clone())));
        let n = norm(k, &q)?;
        if !n.is_squarefree(&RationalField) {
            continue;
        }
        let mut out = Vec::new();
        for (nj, _) in factor_univariate_poly(&n)? {
            let phi = q.gcd(k, &embed_rational_poly(k, &nj));
            // undo the shift: φ(T + s α)
            let back = phi.compose(k, &t.add(k, &UPoly::constant(k, sa.clone())));
            out.push(back.monic(k));
        }
        return Ok(out);
    }
    Err(Error::Domain("no squarefree norm found for factorization over a number field".into()))
}
