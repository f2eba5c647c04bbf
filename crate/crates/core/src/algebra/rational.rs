use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats as `p/q` with an explicit denominator, the wire format of reports.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() || den < BigInt::zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_string_forms() {
        let q = Rational::new(BigInt::from(-6), BigInt::from(4));
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(parse_rational("-3/2"), Some(q));
        assert_eq!(parse_rational("7"), Some(rat(7)));
        assert_eq!(format_rational(&rat(7)), "7/1");
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("1/-2"), None);
    }
}
