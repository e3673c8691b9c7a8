//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`Polynomial`] is a map from monomials to nonzero coefficients over a
//! fixed, ordered [`VariableSet`]. The term order is graded (total degree
//! first) with a lexicographic tie-break in declared variable order, so
//! printing and iteration are deterministic and two polynomials are equal
//! exactly when their canonical forms coincide.

mod parse;
mod univariate;

pub use univariate::UnivariatePolynomial;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{binomial, parse_rational, Rational};

/// Ordered set of distinct variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Vec<String>,
}

impl VariableSet {
    /// Builds a variable set, rejecting duplicates and empty names.
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::InvalidMatroid("empty variable name".into()));
            }
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(VariableSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Union preserving `self`'s order, appending the new names of `other`.
    pub fn union(&self, other: &VariableSet) -> VariableSet {
        let mut names = self.names.clone();
        for n in &other.names {
            if !names.contains(n) {
                names.push(n.clone());
            }
        }
        VariableSet { names }
    }
}

/// Exponent vector over a fixed variable set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn constant(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_multi_affine(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }
}

impl Ord for Monomial {
    // Graded order; within a degree the exponent-vector-larger monomial
    // comes first so map iteration matches the printed order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial in canonical form: no zero coefficients
/// stored, terms ordered by the graded term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: VariableSet,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: VariableSet) -> Self {
        Polynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: VariableSet, c: Rational) -> Self {
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::constant(p.vars.len()), c);
        }
        p
    }

    pub fn one(vars: VariableSet) -> Self {
        Polynomial::constant(vars, Rational::one())
    }

    /// The polynomial `name` as a member of `vars`.
    pub fn variable(vars: VariableSet, name: &str) -> Result<Self> {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut p = Polynomial::zero(vars);
        p.terms.insert(Monomial::new(exps), Rational::one());
        Ok(p)
    }

    /// Builds a polynomial from raw (exponent vector, coefficient) pairs.
    /// Duplicate monomials are combined; zero coefficients dropped.
    pub fn from_terms<I>(vars: VariableSet, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Polynomial::zero(vars);
        for (exps, c) in terms {
            if exps.len() != p.vars.len() {
                return Err(Error::ArityMismatch {
                    expected: p.vars.len(),
                    got: exps.len(),
                });
            }
            p.add_term(Monomial::new(exps), c);
        }
        Ok(p)
    }

    /// Parses the textual grammar over the given variables.
    pub fn parse(text: &str, vars: &VariableSet) -> Result<Self> {
        parse::parse(text, vars)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` is the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::constant(self.vars.len()))
    }

    /// Coefficient of a monomial given as (variable name, exponent) pairs.
    pub fn coeff_of(&self, powers: &[(&str, u32)]) -> Result<Rational> {
        let mut exps = vec![0u32; self.vars.len()];
        for (name, e) in powers {
            let idx = self
                .vars
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            exps[idx] += e;
        }
        Ok(self.coeff(&Monomial::new(exps)))
    }

    /// Re-expresses the polynomial over `target`, matching variables by
    /// name. Fails if a variable with a nonzero exponent is missing.
    pub fn embed(&self, target: &VariableSet) -> Result<Polynomial> {
        if *target == self.vars {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> = self
            .vars
            .names()
            .iter()
            .map(|n| target.index_of(n))
            .collect();
        let mut out = Polynomial::zero(target.clone());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => exps[j] = e,
                    None => return Err(Error::UnknownVariable(self.vars.names()[i].clone())),
                }
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Equality up to renaming-free embedding: same named monomials and
    /// coefficients regardless of declared variable order or unused names.
    pub fn semantic_eq(&self, other: &Polynomial) -> bool {
        let joint = self.vars.union(&other.vars);
        match (self.embed(&joint), other.embed(&joint)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }

    fn binary<F>(&self, rhs: &Polynomial, f: F) -> Polynomial
    where
        F: Fn(&Polynomial, &Polynomial) -> Polynomial,
    {
        if self.vars == rhs.vars {
            f(self, rhs)
        } else {
            let joint = self.vars.union(&rhs.vars);
            // Union embedding keeps every used variable, so this cannot fail.
            let a = self.embed(&joint).expect("union embedding");
            let b = rhs.embed(&joint).expect("union embedding");
            f(&a, &b)
        }
    }

    pub fn add(&self, rhs: &Polynomial) -> Polynomial {
        self.binary(rhs, |a, b| {
            let mut out = a.clone();
            for (m, c) in &b.terms {
                out.add_term(m.clone(), c.clone());
            }
            out
        })
    }

    pub fn sub(&self, rhs: &Polynomial) -> Polynomial {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        self.binary(rhs, |a, b| {
            let mut out = Polynomial::zero(a.vars.clone());
            for (ma, ca) in &a.terms {
                for (mb, cb) in &b.terms {
                    let exps = ma
                        .exponents()
                        .iter()
                        .zip(mb.exponents())
                        .map(|(x, y)| x + y)
                        .collect();
                    out.add_term(Monomial::new(exps), ca * cb);
                }
            }
            out
        })
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.vars.clone());
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.clone() * c;
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.vars.clone());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = out.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Exact evaluation at a rational point (in declared variable order).
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars.len() {
            return Err(Error::ArityMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Restriction to the line `t ↦ ta + b` as an exact univariate
    /// polynomial in `t`. With `b = 0` this is the real-zero probe `p(ta)`.
    pub fn restrict_line(&self, a: &[Rational], b: &[Rational]) -> Result<UnivariatePolynomial> {
        if a.len() != self.vars.len() || b.len() != self.vars.len() {
            return Err(Error::ArityMismatch {
                expected: self.vars.len(),
                got: a.len().max(b.len()),
            });
        }
        let mut acc = UnivariatePolynomial::zero();
        for (m, c) in &self.terms {
            let mut term = UnivariatePolynomial::constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let factor = UnivariatePolynomial::new(vec![b[i].clone(), a[i].clone()]);
                for _ in 0..e {
                    term = term.mul(&factor);
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Exact shift `p(x + a)`.
    pub fn shift(&self, a: &[Rational]) -> Result<Polynomial> {
        if a.len() != self.vars.len() {
            return Err(Error::ArityMismatch {
                expected: self.vars.len(),
                got: a.len(),
            });
        }
        let mut out = Polynomial::zero(self.vars.clone());
        for (m, c) in &self.terms {
            // Expand prod_i (x_i + a_i)^{e_i} term by term.
            let mut partial: Vec<(Vec<u32>, Rational)> = vec![(vec![], c.clone())];
            for (i, &e) in m.exponents().iter().enumerate() {
                let mut next = Vec::with_capacity(partial.len() * (e as usize + 1));
                for (exps, coeff) in &partial {
                    let mut apow = Rational::one();
                    for k in (0..=e).rev() {
                        // k = exponent kept on x_i; a_i^{e-k} accumulated.
                        let degree_drop = (e - k) as usize;
                        let bin = Rational::from_integer(binomial(e as usize, degree_drop));
                        let mut exps2 = exps.clone();
                        exps2.push(k);
                        next.push((exps2, coeff * &bin * &apow));
                        apow *= &a[i];
                    }
                }
                partial = next;
            }
            for (exps, coeff) in partial {
                out.add_term(Monomial::new(exps), coeff);
            }
        }
        Ok(out)
    }

    /// Degree-`d` homogenization `w^d · p(w^{-1} x)` with a fresh variable
    /// `w` prepended to the variable set.
    pub fn homogenize(&self, d: usize, newvar: &str) -> Result<Polynomial> {
        if let Some(deg) = self.degree() {
            if d < deg {
                return Err(Error::DegreeTooSmall {
                    target: d,
                    actual: deg,
                });
            }
        }
        if self.vars.index_of(newvar).is_some() {
            return Err(Error::DuplicateVariable(newvar.to_string()));
        }
        let mut names = vec![newvar.to_string()];
        names.extend(self.vars.names().iter().cloned());
        let vars = VariableSet::new(names)?;
        let mut out = Polynomial::zero(vars);
        for (m, c) in &self.terms {
            let mut exps = Vec::with_capacity(m.exponents().len() + 1);
            exps.push((d - m.degree()) as u32);
            exps.extend_from_slice(m.exponents());
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Substitutes a polynomial for one variable. The replacement is
    /// embedded over the union of both variable sets.
    pub fn substitute(&self, var: &str, value: &Polynomial) -> Result<Polynomial> {
        let idx = self
            .vars
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let joint = self.vars.union(value.vars());
        let value = value.embed(&joint)?;
        let mut powers: Vec<Polynomial> = vec![Polynomial::one(joint.clone())];
        let mut out = Polynomial::zero(joint.clone());
        for (m, c) in &self.terms {
            let e = m.exponents()[idx] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(&value);
                powers.push(next);
            }
            let mut exps: Vec<u32> = vec![0; joint.len()];
            for (i, &ei) in m.exponents().iter().enumerate() {
                let j = joint.index_of(&self.vars.names()[i]).unwrap();
                exps[j] = ei;
            }
            exps[joint.index_of(var).unwrap()] = 0;
            let rest = Polynomial::from_terms(joint.clone(), [(exps, c.clone())])?;
            out = out.add(&rest.mul(&powers[e]));
        }
        Ok(out)
    }

    /// Sets one variable to a rational constant.
    pub fn substitute_value(&self, var: &str, value: &Rational) -> Result<Polynomial> {
        self.substitute(var, &Polynomial::constant(self.vars.clone(), value.clone()))
    }

    /// `order`-fold partial derivative with respect to `var`.
    pub fn partial_derivative(&self, var: &str, order: u32) -> Result<Polynomial> {
        let idx = self
            .vars
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        let mut out = self.clone();
        for _ in 0..order {
            let mut next = Polynomial::zero(out.vars.clone());
            for (m, c) in &out.terms {
                let e = m.exponents()[idx];
                if e == 0 {
                    continue;
                }
                let mut exps = m.exponents().to_vec();
                exps[idx] = e - 1;
                next.add_term(Monomial::new(exps), c * Rational::from_integer(e.into()));
            }
            out = next;
        }
        Ok(out)
    }

    /// Terms with every exponent at most one.
    pub fn multi_affine_part(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.vars.clone());
        for (m, c) in &self.terms {
            if m.is_multi_affine() {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn is_multi_affine(&self) -> bool {
        self.terms.keys().all(Monomial::is_multi_affine)
    }

    /// True when all terms share the same total degree (the zero polynomial
    /// counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Sum of the degree-`k` terms.
    pub fn homogeneous_component(&self, k: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.vars.clone());
        for (m, c) in &self.terms {
            if m.degree() == k {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Support of a multi-affine polynomial: the family of variable subsets
    /// carrying a nonzero coefficient, each subset in declared variable
    /// order, the family ordered by the term order.
    pub fn support(&self) -> Result<Vec<Vec<String>>> {
        if !self.is_multi_affine() {
            return Err(Error::NotMultiAffine);
        }
        Ok(self
            .terms
            .keys()
            .map(|m| {
                m.exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e == 1)
                    .map(|(i, _)| self.vars.names()[i].clone())
                    .collect()
            })
            .collect())
    }

    /// True when every coefficient is nonnegative.
    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Names of variables that occur with a nonzero exponent.
    pub fn occurring_variables(&self) -> Vec<String> {
        self.vars
            .names()
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|m| m.exponents()[*i] > 0))
            .map(|(_, n)| n.clone())
            .collect()
    }
}

/// The `k`-th elementary symmetric polynomial in the given variables.
pub fn elementary_symmetric(vars: &VariableSet, k: usize) -> Result<Polynomial> {
    let n = vars.len();
    if k > n {
        return Err(Error::Precondition(format!(
            "elementary symmetric index {k} exceeds {n} variables"
        )));
    }
    let mut out = Polynomial::zero(vars.clone());
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let mut exps = vec![0u32; n];
        for &i in &subset {
            exps[i] = 1;
        }
        out.add_term(Monomial::new(exps), Rational::one());
        // Next k-combination in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if subset[i] != i + n - k {
                break;
            }
            if i == 0 {
                return Ok(out);
            }
        }
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
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
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.degree() == 0 {
                factors.push(mag.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.names()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars.names()[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    c: String,
    e: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    vars: Vec<String>,
    terms: Vec<JsonTerm>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        JsonPoly {
            vars: self.vars.names().to_vec(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| JsonTerm {
                    c: c.to_string(),
                    e: m.exponents().to_vec(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = JsonPoly::deserialize(deserializer)?;
        let vars = VariableSet::new(raw.vars).map_err(D::Error::custom)?;
        let terms: Vec<(Vec<u32>, Rational)> = raw
            .terms
            .into_iter()
            .map(|t| Ok((t.e, parse_rational(&t.c).map_err(D::Error::custom)?)))
            .collect::<std::result::Result<_, D::Error>>()?;
        Polynomial::from_terms(vars, terms).map_err(D::Error::custom)
    }
}
