//! Dense polynomials over a small prime field 𝔽_p, coefficients low to high.

use num_bigint::BigUint;
use rand::Rng;

pub(crate) type PolyP = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Zp {
    pub p: u64,
}

impl Zp {
    pub fn new(p: u64) -> Self {
        Zp { p }
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0);
        let mut r = 1u64;
        let mut b = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mulm(r, b);
            }
            b = self.mulm(b, b);
            e >>= 1;
        }
        r
    }

    pub fn trim(&self, mut a: PolyP) -> PolyP {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        self.trim(v)
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut v = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                v[i + j] = (v[i + j] + self.mulm(x, y)) % self.p;
            }
        }
        self.trim(v)
    }

    pub fn divrem(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        let db = b.len() - 1;
        let li = self.inv(*b.last().unwrap());
        let mut r = a.to_vec();
        if r.len() <= db {
            return (Vec::new(), self.trim(r));
        }
        let mut q = vec![0u64; r.len() - db];
        for i in (0..q.len()).rev() {
            let c = self.mulm(r[i + db], li);
            if c == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + self.p - self.mulm(c, y)) % self.p;
            }
            q[i] = c;
        }
        r.truncate(db);
        (self.trim(q), self.trim(r))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> PolyP {
        self.divrem(a, b).1
    }

    pub fn monic(&self, a: &[u64]) -> PolyP {
        match a.last() {
            None => Vec::new(),
            Some(&l) => {
                let li = self.inv(l);
                a.iter().map(|&x| self.mulm(x, li)).collect()
            }
        }
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> PolyP {
        let (mut x, mut y) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// `(g, s, t)` with `s a + t b = g` monic.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP, PolyP) {
        let (mut r0, mut r1) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let li = self.inv(*r0.last().unwrap());
        let sc = |v: &[u64]| -> PolyP { self.trim(v.iter().map(|&x| self.mulm(x, li)).collect()) };
        (sc(&r0), sc(&s0), sc(&t0))
    }

    pub fn derivative(&self, a: &[u64]) -> PolyP {
        let v = a.iter().enumerate().skip(1).map(|(i, &c)| self.mulm(c, i as u64 % self.p)).collect();
        self.trim(v)
    }

    pub fn powmod(&self, base: &[u64], exp: &BigUint, modulus: &[u64]) -> PolyP {
        let mut result = vec![1u64];
        let mut b = self.rem(base, modulus);
        for i in 0..exp.bits() {
            if exp.bit(i) {
                result = self.rem(&self.mul(&result, &b), modulus);
            }
            b = self.rem(&self.mul(&b, &b), modulus);
        }
        result
    }

    pub fn is_squarefree(&self, f: &[u64]) -> bool {
        let d = self.derivative(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }

    /// Distinct-degree then equal-degree (Cantor–Zassenhaus) factorization of a monic
    /// squarefree polynomial. Requires an odd prime.
    pub fn factor_squarefree<R: Rng>(&self, f: &[u64], rng: &mut R) -> Vec<PolyP> {
        let mut out = Vec::new();
        let mut rest = self.monic(f);
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let mut d = 1usize;
        while rest.len() > 1 {
            if 2 * d > rest.len() - 1 {
                out.push(rest.clone());
                break;
            }
            h = self.powmod(&h, &BigUint::from(self.p), &rest);
            let g = self.gcd(&self.sub(&h, &x), &rest);
            if g.len() > 1 {
                self.equal_degree(&g, d, rng, &mut out);
                rest = self.divrem(&rest, &g).0;
                h = self.rem(&h, &rest);
            }
            d += 1;
        }
        out.sort();
        out
    }

    fn equal_degree<R: Rng>(&self, f: &[u64], d: usize, rng: &mut R, out: &mut Vec<PolyP>) {
        let n = f.len() - 1;
        if n == d {
            out.push(f.to_vec());
            return;
        }
        let exp = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: PolyP = self.trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.sub(&self.powmod(&a, &exp, f), &[1]);
            let g = self.gcd(&b, f);
            if g.len() > 1 && g.len() < f.len() {
                let q = self.divrem(f, &g).0;
                self.equal_degree(&g, d, rng, out);
                self.equal_degree(&self.monic(&q), d, rng, out);
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn factors_multiply_back() {
        let z = Zp::new(7);
        // (x+1)(x+2)(x^2+1) mod 7; x^2+1 is irreducible mod 7
        let f = z.mul(&z.mul(&[1, 1], &[2, 1]), &[1, 0, 1]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let fs = z.factor_squarefree(&f, &mut rng);
        assert_eq!(fs.len(), 3);
        let prod = fs.iter().fold(vec![1u64], |acc, g| z.mul(&acc, g));
        assert_eq!(prod, f);
    }
}
