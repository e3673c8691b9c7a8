//! Exact real-root counting for univariate rational polynomials.
//!
//! Root counting runs on the square-free part, so multiple roots count
//! once and the Sturm chain ends in a nonzero constant. Chain elements are
//! content-stripped (a positive scaling) to keep integer sizes down; only
//! the signs matter for the variation count.

use std::ops::Bound;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::UnivariatePolynomial;
use crate::rational::{sign, Rational};

/// Sturm chain of the square-free part of a polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    seq: Vec<UnivariatePolynomial>,
}

/// `f / gcd(f, f')`, monic-normalized. The result has the same distinct
/// roots as `f`, each simple.
pub fn squarefree_part(f: &UnivariatePolynomial) -> Result<UnivariatePolynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == Some(0) {
        return Ok(UnivariatePolynomial::from_i64(&[1]));
    }
    let g = f.gcd(&f.derivative());
    let (quot, rem) = f.div_rem(&g)?;
    debug_assert!(rem.is_zero());
    Ok(quot.monic())
}

impl SturmChain {
    /// Builds the chain for the square-free part of `f`.
    pub fn new(f: &UnivariatePolynomial) -> Result<Self> {
        let f0 = squarefree_part(f)?;
        let mut seq = vec![f0.primitive_part()];
        if seq[0].degree() >= Some(1) {
            seq.push(seq[0].derivative().primitive_part());
            loop {
                let n = seq.len();
                let (_, rem) = seq[n - 2].div_rem(&seq[n - 1])?;
                if rem.is_zero() {
                    break;
                }
                seq.push(rem.neg().primitive_part());
            }
        }
        Ok(SturmChain { seq })
    }

    pub fn elements(&self) -> &[UnivariatePolynomial] {
        &self.seq
    }

    /// Sign variations at a point, zeros skipped. With the zero-skipping
    /// convention this equals the right limit of the variation count, so
    /// `variations(a) - variations(b)` counts distinct roots in `(a, b]`.
    fn variations_at(&self, x: &ChainPoint) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for f in &self.seq {
            let s = match x {
                ChainPoint::NegInf => sign_at_neg_inf(f),
                ChainPoint::PosInf => sign_at_pos_inf(f),
                ChainPoint::At(v) => sign(&f.evaluate(v)),
            };
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }
}

enum ChainPoint {
    NegInf,
    At(Rational),
    PosInf,
}

fn sign_at_pos_inf(f: &UnivariatePolynomial) -> i8 {
    f.leading_coeff().map_or(0, sign)
}

fn sign_at_neg_inf(f: &UnivariatePolynomial) -> i8 {
    match (f.leading_coeff(), f.degree()) {
        (Some(l), Some(d)) if d % 2 == 1 => -sign(l),
        (Some(l), Some(_)) => sign(l),
        _ => 0,
    }
}

/// Number of distinct real roots of `f` in the interval, exact. Endpoints
/// use `std::ops::Bound`; unbounded ends are open by nature.
pub fn count_real_roots(
    f: &UnivariatePolynomial,
    lo: Bound<Rational>,
    hi: Bound<Rational>,
) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lo_val = bound_value(&lo);
    let hi_val = bound_value(&hi);
    if let (Some(a), Some(b)) = (lo_val, hi_val) {
        if a > b {
            return Err(Error::InvalidInterval);
        }
        if a == b {
            // Degenerate interval: only the doubly-closed point can hold a root.
            return Ok(match (&lo, &hi) {
                (Bound::Included(a), Bound::Included(_)) => {
                    usize::from(f.evaluate(a).is_zero())
                }
                _ => 0,
            });
        }
    }
    let chain = SturmChain::new(f)?;
    let at_lo = match &lo {
        Bound::Unbounded => ChainPoint::NegInf,
        Bound::Included(a) | Bound::Excluded(a) => ChainPoint::At(a.clone()),
    };
    let at_hi = match &hi {
        Bound::Unbounded => ChainPoint::PosInf,
        Bound::Included(b) | Bound::Excluded(b) => ChainPoint::At(b.clone()),
    };
    // Base count over the half-open interval (lo, hi].
    let mut count = chain.variations_at(&at_lo) - chain.variations_at(&at_hi);
    if let Bound::Included(a) = &lo {
        if f.evaluate(a).is_zero() {
            count += 1;
        }
    }
    if let Bound::Excluded(b) = &hi {
        if f.evaluate(b).is_zero() {
            count -= 1;
        }
    }
    Ok(count)
}

fn bound_value(b: &Bound<Rational>) -> Option<&Rational> {
    match b {
        Bound::Included(v) | Bound::Excluded(v) => Some(v),
        Bound::Unbounded => None,
    }
}

/// Number of distinct real roots on the whole line.
pub fn count_real_roots_all(f: &UnivariatePolynomial) -> Result<usize> {
    count_real_roots(f, Bound::Unbounded, Bound::Unbounded)
}

/// True exactly when `f` is nonzero and splits into real linear factors.
/// Nonzero constants are real-rooted (empty root set); the zero polynomial
/// is not.
pub fn is_real_rooted(f: &UnivariatePolynomial) -> bool {
    if f.is_zero() {
        return false;
    }
    let sf = squarefree_part(f).expect("nonzero input");
    let deg = sf.degree().expect("nonzero square-free part");
    count_real_roots_all(&sf).expect("nonzero input") == deg
}
