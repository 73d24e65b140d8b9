//! Exact rational scalars.
//!
//! `Rational` is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator; zero is stored as `0/1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::AlgebraError;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let bad = || AlgebraError::Parse(format!("not a rational: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Canonical `"p/q"` text, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(format_rational(&ratio(3, 2)), "3/2");
        assert_eq!(format_rational(&ratio(-4, 2)), "-2");
        assert_eq!(format_rational(&rat(0)), "0");
        assert_eq!(parse_rational(" -7 ").unwrap(), rat(-7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn denominators_are_positive_and_reduced() {
        let r = ratio(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(ratio(0, -5).denom(), &BigInt::from(1));
    }
}
