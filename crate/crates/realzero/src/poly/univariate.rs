//! Dense univariate polynomials over the rationals, lowest degree first.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Univariate polynomial; the coefficient vector never ends in a zero, so
/// the zero polynomial is the empty vector and `degree()` is `None` for it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnivariatePolynomial {
    coeffs: Vec<Rational>,
}

impl UnivariatePolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePolynomial { coeffs }
    }

    pub fn zero() -> Self {
        UnivariatePolynomial { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        UnivariatePolynomial::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UnivariatePolynomial::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        UnivariatePolynomial::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        UnivariatePolynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePolynomial::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UnivariatePolynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UnivariatePolynomial::zero();
        }
        UnivariatePolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dlead = divisor.leading_coeff().ok_or(Error::ZeroPolynomial)?;
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return Ok((UnivariatePolynomial::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        for k in (ddeg..rem.len()).rev() {
            let factor = &rem[k] / dlead;
            if factor.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let delta = dc * &factor;
                rem[k - ddeg + j] -= delta;
            }
            quot[k - ddeg] = factor;
        }
        Ok((
            UnivariatePolynomial::new(quot),
            UnivariatePolynomial::new(rem),
        ))
    }

    /// Divides out the positive rational content, leaving coprime integer
    /// coefficients. Only a positive scaling, so signs are preserved.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let denom_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let content = ints
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        UnivariatePolynomial {
            coeffs: ints
                .into_iter()
                .map(|n| Rational::from_integer(n / &content))
                .collect(),
        }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// Greatest common divisor, monic-normalized.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive_part();
        }
        a.monic()
    }
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}*t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qr};

    #[test]
    fn division_round_trips() {
        let f = UnivariatePolynomial::from_i64(&[-1, 0, 1]); // t^2 - 1
        let g = UnivariatePolynomial::from_i64(&[1, 1]); // t + 1
        let (quot, rem) = f.div_rem(&g).unwrap();
        assert_eq!(quot, UnivariatePolynomial::from_i64(&[-1, 1]));
        assert!(rem.is_zero());
        assert_eq!(quot.mul(&g).add(&rem), f);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = UnivariatePolynomial::from_i64(&[-1, 1]).mul(&UnivariatePolynomial::from_i64(&[2, 1]));
        let g = UnivariatePolynomial::from_i64(&[-1, 1]).mul(&UnivariatePolynomial::from_i64(&[5, 1]));
        assert_eq!(f.gcd(&g), UnivariatePolynomial::from_i64(&[-1, 1]));
    }

    #[test]
    fn evaluation_and_derivative() {
        let f = UnivariatePolynomial::from_i64(&[1, 3, 3]);
        assert_eq!(f.evaluate(&q(2)), q(19));
        assert_eq!(f.derivative(), UnivariatePolynomial::from_i64(&[3, 6]));
        assert_eq!(f.evaluate(&qr(1, 2)), qr(13, 4));
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(UnivariatePolynomial::zero().degree(), None);
        assert_eq!(UnivariatePolynomial::from_i64(&[5]).degree(), Some(0));
    }

    #[test]
    fn primitive_part_strips_content_keeping_sign() {
        let f = UnivariatePolynomial::new(vec![qr(-2, 3), qr(4, 3)]);
        assert_eq!(f.primitive_part(), UnivariatePolynomial::from_i64(&[-1, 2]));
    }
}
