use num_traits::One;

use super::poly::MultiPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Sylvester resultant of `f` and `g` with respect to variable `var`.
///
/// The result lives in the same ring but does not involve `var`.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, var: usize) -> Result<MultiPoly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::Domain("resultant of a zero polynomial".into()));
    }
    if var >= f.nvars() || f.vars() != g.vars() {
        return Err(Error::Domain("resultant variable not in the common ring".into()));
    }
    let a = f.coefficients_in(var);
    let b = g.coefficients_in(var);
    let (m, n) = (a.len() - 1, b.len() - 1);
    if m == 0 {
        return Ok(a[0].pow(n as u32));
    }
    if n == 0 {
        return Ok(b[0].pow(m as u32));
    }
    let size = m + n;
    let zero = MultiPoly::zero(f.vars());
    let mut mat = vec![vec![zero.clone(); size]; size];
    // rows of f: coefficients from highest degree, shifted
    for r in 0..n {
        for (k, c) in a.iter().rev().enumerate() {
            mat[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in b.iter().rev().enumerate() {
            mat[n + r][r + k] = c.clone();
        }
    }
    Ok(bareiss_det(mat))
}

/// Resultant plus a flag raised when the leading coefficients of `f` and `g` in `var`
/// vanish simultaneously somewhere; there the resultant may vanish without a common root.
pub fn resultant_with_caveat(f: &MultiPoly, g: &MultiPoly, var: usize) -> Result<(MultiPoly, bool)> {
    let res = resultant(f, g, var)?;
    let lf = f.coefficients_in(var).pop().unwrap();
    let lg = g.coefficients_in(var).pop().unwrap();
    let caveat = if lf.is_constant() || lg.is_constant() {
        false
    } else {
        !crate::groebner::is_unit_ideal(&[lf, lg])?
    };
    Ok((res, caveat))
}

/// Fraction-free determinant over a polynomial ring.
fn bareiss_det(mut m: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = m.len();
    let vars = m[0][0].vars().clone();
    let mut sign = Rational::one();
    let mut prev = MultiPoly::one(&vars);
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return MultiPoly::zero(&vars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = MultiPoly::zero(&vars);
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].scale(&sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn hand_computed_resultants() {
        let r = MultiPoly::ring(&["x"]);
        let f = MultiPoly::from_int_terms(&r, &[(1, &[2]), (1, &[0])]);
        let g = MultiPoly::from_int_terms(&r, &[(1, &[1]), (-1, &[0])]);
        assert_eq!(resultant(&f, &g, 0).unwrap(), MultiPoly::constant(&r, rat(2)));
        assert!(resultant(&f, &f, 0).unwrap().is_zero());

        let r2 = MultiPoly::ring(&["x", "y"]);
        let cusp = MultiPoly::from_int_terms(&r2, &[(1, &[0, 2]), (-1, &[3, 0])]);
        let fy = MultiPoly::from_int_terms(&r2, &[(2, &[0, 1])]);
        // lc(f)^1 · g(√x³) · g(-√x³) = -4x³
        let expect = MultiPoly::from_int_terms(&r2, &[(-4, &[3, 0])]);
        assert_eq!(resultant(&cusp, &fy, 1).unwrap(), expect);
    }

    #[test]
    fn zero_input_is_domain_error() {
        let r = MultiPoly::ring(&["x"]);
        let z = MultiPoly::zero(&r);
        assert!(matches!(resultant(&z, &MultiPoly::one(&r), 0), Err(Error::Domain(_))));
    }
}
