//! Helpers around arbitrary-precision rationals.
//!
//! `num_rational::BigRational` already keeps values reduced with a positive
//! denominator, which is exactly the invariant the rest of the crate relies
//! on.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// Integer rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics on a zero denominator.
pub fn qr(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `int` or `int/posint`, e.g. `-3/4`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |msg: &str| Error::Parse {
        pos: 0,
        msg: format!("{msg}: `{s}`"),
    };
    let mut parts = s.splitn(2, '/');
    let num: BigInt = parts
        .next()
        .unwrap_or("")
        .trim()
        .parse()
        .map_err(|_| bad("invalid integer"))?;
    match parts.next() {
        None => Ok(Rational::from_integer(num)),
        Some(d) => {
            let den: BigInt = d.trim().parse().map_err(|_| bad("invalid denominator"))?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Sign of a rational as -1, 0, or 1.
pub fn sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Lossy conversion to `f64` (numerator/denominator division).
pub fn to_f64(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        // Extremely large values: fall back to a quotient of truncated parts.
        let n = x.numer().to_f64().unwrap_or(f64::MAX);
        let d = x.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_and_fractional() {
        assert_eq!(parse_rational("7").unwrap(), q(7));
        assert_eq!(parse_rational("-3/4").unwrap(), qr(-3, 4));
        assert_eq!(parse_rational(" 6/8 ").unwrap(), qr(3, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(7, 3), BigInt::from(35));
        assert_eq!(binomial(4, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }
}
