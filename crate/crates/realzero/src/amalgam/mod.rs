//! Constructive amalgamation of real zero polynomials.
//!
//! Three degree-preserving constructions, each verified exactly after the
//! fact: the marginals `r(y, 0) = p` and `r(0, z) = q` are checked as
//! polynomial identities and the degree bound `deg r <= max(deg p, deg q)`
//! is asserted before anything is returned.
//!
//! * [`amalgamate_disjoint`] — no shared variables: a mixed-derivative
//!   operator applied to the degree-d homogenizations.
//! * [`amalgamate_quadratic`] — degree at most two: one PSD matrix
//!   completion step along the clique sum of the two discriminants.
//! * [`amalgamate_determinantal`] — simultaneous determinantal
//!   representations glued directly.
//!
//! The averaging identities behind the first construction (a polarized
//! derivative identity and a permutation/orthogonal averaging equality)
//! are exposed as exact checks, plus a seeded Monte Carlo integrator over
//! the orthogonal group for the float cross-check.

mod mc;

pub use mc::{
    mc_orthogonal_amalgam, mc_orthogonal_amalgam_sequential, FloatPolynomial, McEstimate,
};

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::certify::{discriminant_matrix, quadratic_blocks, quadratic_real_zero, Status};
use crate::error::{Error, Result};
use crate::matrix::{det_polynomial, MatQ, SymmetricMatrixQ};
use crate::poly::{Polynomial, VariableSet};
use crate::rational::{factorial, q, qr, Rational};

/// A compatible pair: `p` over the shared and left variables, `q` over
/// the shared and right variables, agreeing when the non-shared blocks
/// vanish and nonvanishing at the origin.
#[derive(Debug, Clone)]
pub struct AmalgamationProblem {
    shared: VariableSet,
    left: VariableSet,
    right: VariableSet,
    p: Polynomial,
    q: Polynomial,
}

impl AmalgamationProblem {
    pub fn new(
        shared: &[String],
        left: &[String],
        right: &[String],
        p: &Polynomial,
        q: &Polynomial,
    ) -> Result<Self> {
        let shared_vs = VariableSet::new(shared.to_vec())?;
        let left_vs = VariableSet::new(left.to_vec())?;
        let right_vs = VariableSet::new(right.to_vec())?;
        let all: Vec<String> = shared.iter().chain(left).chain(right).cloned().collect();
        VariableSet::new(all)?; // disjointness of the three blocks
        let p_vars = VariableSet::new(shared.iter().chain(left).cloned().collect::<Vec<_>>())?;
        let q_vars = VariableSet::new(shared.iter().chain(right).cloned().collect::<Vec<_>>())?;
        let p = p.embed(&p_vars)?;
        let q = q.embed(&q_vars)?;
        if p.constant_term().is_zero() {
            return Err(Error::Precondition("p vanishes at the origin".into()));
        }
        let defect = compatibility_defect(&p, &q, &left_vs, &right_vs, &shared_vs)?;
        if !defect.is_zero() {
            return Err(Error::Incompatible(format!(
                "p and q disagree after zeroing the non-shared blocks; difference {defect}"
            )));
        }
        Ok(AmalgamationProblem {
            shared: shared_vs,
            left: left_vs,
            right: right_vs,
            p,
            q,
        })
    }

    pub fn shared(&self) -> &VariableSet {
        &self.shared
    }

    pub fn left(&self) -> &VariableSet {
        &self.left
    }

    pub fn right(&self) -> &VariableSet {
        &self.right
    }

    pub fn p(&self) -> &Polynomial {
        &self.p
    }

    pub fn q(&self) -> &Polynomial {
        &self.q
    }
}

/// `p` with the `zero` block vanished, re-expressed over the shared
/// variables, minus the same for `q`. Identically zero exactly for
/// compatible pairs.
fn compatibility_defect(
    p: &Polynomial,
    q: &Polynomial,
    left: &VariableSet,
    right: &VariableSet,
    shared: &VariableSet,
) -> Result<Polynomial> {
    let mut pm = p.clone();
    for v in left.names() {
        pm = pm.substitute_value(v, &Rational::zero())?;
    }
    let mut qm = q.clone();
    for v in right.names() {
        qm = qm.substitute_value(v, &Rational::zero())?;
    }
    Ok(pm.embed(shared)?.sub(&qm.embed(shared)?))
}

/// A variable name not occurring in `vars`.
fn fresh_var(vars: &VariableSet, base: &str) -> String {
    if vars.index_of(base).is_none() {
        return base.to_string();
    }
    (0..)
        .map(|i| format!("{base}{i}"))
        .find(|cand| vars.index_of(cand).is_none())
        .unwrap()
}

fn set_block_zero(p: &Polynomial, block: &VariableSet) -> Result<Polynomial> {
    let mut out = p.clone();
    for v in block.names() {
        if out.vars().index_of(v).is_some() {
            out = out.substitute_value(v, &Rational::zero())?;
        }
    }
    Ok(out)
}

fn check_marginals(r: &Polynomial, p: &Polynomial, q: &Polynomial, left: &VariableSet, right: &VariableSet) -> Result<()> {
    let to_p = set_block_zero(r, right)?.embed(p.vars())?;
    if to_p != *p {
        return Err(Error::Invariant("amalgam does not restrict to p".into()));
    }
    let to_q = set_block_zero(r, left)?.embed(q.vars())?;
    if to_q != *q {
        return Err(Error::Invariant("amalgam does not restrict to q".into()));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Disjoint variables
// ---------------------------------------------------------------------------

/// Degree-preserving amalgam for disjoint variable blocks, with the degree
/// fixed to `max(deg p, deg q)` (the smallest admissible choice).
pub fn amalgamate_disjoint(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    let d = p.degree().unwrap_or(0).max(q.degree().unwrap_or(0));
    disjoint_with_degree(p, q, d)
}

/// The underlying operator construction at an explicit common degree
/// bound `d >= max(deg p, deg q)`:
/// homogenize both inputs to degree `d` with fresh variables `s` and `t`,
/// apply `sum_{i+j=d} d_s^i d_t^j` to the product, verify exactly that the
/// result is a polynomial in `s + t`, and evaluate at `s + t = 1` scaled
/// by `1/d!`.
pub fn disjoint_with_degree(p: &Polynomial, q: &Polynomial, d: usize) -> Result<Polynomial> {
    for v in p.vars().names() {
        if q.vars().index_of(v).is_some() {
            return Err(Error::Precondition(format!(
                "blocks must be disjoint, `{v}` is shared"
            )));
        }
    }
    let c0 = p.constant_term();
    if c0.is_zero() || q.constant_term().is_zero() {
        return Err(Error::Precondition(
            "inputs must not vanish at the origin".into(),
        ));
    }
    if q.constant_term() != c0 {
        return Err(Error::Incompatible(format!(
            "constant terms differ: {} vs {}",
            c0,
            q.constant_term()
        )));
    }
    let pn = p.scale(&c0.recip());
    let qn = q.scale(&q.constant_term().recip());
    let joint = p.vars().union(q.vars());
    let s = fresh_var(&joint, "s");
    let t = fresh_var(&joint.union(&VariableSet::new([s.clone()])?), "t");
    let ph = pn.homogenize(d, &s)?;
    let qh = qn.homogenize(d, &t)?;
    let prod = ph.mul(&qh);

    let mut mixed = Polynomial::zero(prod.vars().clone());
    let mut ds = prod.clone();
    // Accumulate d_s^i d_t^(d-i) of the product.
    for i in 0..=d {
        let term = ds.partial_derivative(&t, (d - i) as u32)?;
        mixed = mixed.add(&term);
        if i < d {
            ds = ds.partial_derivative(&s, 1)?;
        }
    }

    // Membership in R[s+t, y, z], checked by exact re-expansion.
    let g = mixed.substitute_value(&t, &Rational::zero())?;
    let st = Polynomial::variable(mixed.vars().clone(), &s)?
        .add(&Polynomial::variable(mixed.vars().clone(), &t)?);
    if g.substitute(&s, &st)? != mixed {
        return Err(Error::Invariant(
            "mixed-derivative sum left the ring generated by s + t".into(),
        ));
    }

    let scaled = g
        .substitute_value(&s, &Rational::one())?
        .scale(&(factorial(d).recip() * &c0));
    let out_vars = p.vars().union(q.vars());
    let r = scaled.embed(&out_vars)?;
    check_marginals(&r, p, q, p.vars(), q.vars())?;
    if r.degree().unwrap_or(0) > d {
        return Err(Error::Invariant("amalgam degree exceeds the bound".into()));
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// Quadratic completion
// ---------------------------------------------------------------------------

/// Quadratic blocks of a compatible pair, in the order (shared, left) and
/// (shared, right).
#[derive(Debug, Clone)]
pub struct QuadraticBlocks {
    pub form_p: SymmetricMatrixQ,
    pub linear_p: Vec<Rational>,
    pub form_q: SymmetricMatrixQ,
    pub linear_q: Vec<Rational>,
}

/// Degree-preserving amalgam of two real zero quadratics sharing a
/// variable block, by one positive semidefinite completion step: the
/// unknown off-diagonal block of the joint discriminant is filled with
/// `W = P_yx X` where `P_xx X = Q_xz`, the clique-sum fill of the two
/// discriminants. The joint discriminant is re-verified PSD and the
/// marginals checked exactly.
pub fn amalgamate_quadratic(prob: &AmalgamationProblem) -> Result<Polynomial> {
    let p = prob.p();
    let q = prob.q();
    if p.degree().unwrap_or(0) > 2 || q.degree().unwrap_or(0) > 2 {
        return Err(Error::Precondition("inputs must be quadratic".into()));
    }
    for (poly, name) in [(p, "p"), (q, "q")] {
        let verdict = quadratic_real_zero(poly)?;
        if verdict.status != Status::Certified {
            return Err(Error::Precondition(format!(
                "{name} is not real zero: witness {}",
                verdict
                    .witness
                    .map(|w| w.describe())
                    .unwrap_or_default()
            )));
        }
    }
    let c0 = p.constant_term();
    let pn = p.scale(&c0.recip());
    let qn = q.scale(&c0.recip());
    let (mp, vp) = quadratic_blocks(&pn)?;
    let (mq, vq) = quadratic_blocks(&qn)?;

    let l = prob.shared.len();
    let m = prob.left.len();
    let n = prob.right.len();

    let disc_p = discriminant_matrix(&mp, &vp)?;
    let disc_q = discriminant_matrix(&mq, &vq)?;
    if !disc_p.is_psd() || !disc_q.is_psd() {
        return Err(Error::Precondition(
            "a discriminant is not PSD; input not real zero".into(),
        ));
    }

    // Clique-sum fill: solve P_xx X = Q_xz, set W = P_yx X.
    let p_xx = disc_p.as_mat().block(0, 0, l, l);
    let p_yx = disc_p.as_mat().block(l, 0, m, l);
    let q_xz = disc_q.as_mat().block(0, l, l, n);
    let x = p_xx.solve(&q_xz)?.ok_or_else(|| {
        Error::Precondition("shared discriminant block cannot reach the right-hand block".into())
    })?;
    let w = p_yx.mul(&x)?;

    // G = (b c^T - W) / 4 completes the quadratic-form matrix.
    let b = MatQ::column(&vp[l..]);
    let c = MatQ::column(&vq[l..]);
    let g = b
        .mul(&c.transpose())?
        .sub(&w)?
        .scale(&qr(1, 4));

    let total = l + m + n;
    let mut form = MatQ::zero(total, total);
    for i in 0..l + m {
        for j in 0..l + m {
            form[(i, j)] = mp.entry(i, j).clone();
        }
    }
    for i in 0..l + n {
        for j in 0..l + n {
            let (gi, gj) = (map_q_index(i, l, m), map_q_index(j, l, m));
            form[(gi, gj)] = mq.entry(i, j).clone();
        }
    }
    for i in 0..m {
        for j in 0..n {
            form[(l + i, l + m + j)] = g[(i, j)].clone();
            form[(l + m + j, l + i)] = g[(i, j)].clone();
        }
    }
    let mut linear = Vec::with_capacity(total);
    linear.extend_from_slice(&vp[..l]);
    linear.extend_from_slice(&vp[l..]);
    linear.extend_from_slice(&vq[l..]);

    let joint = SymmetricMatrixQ::new(form)?;
    let disc_r = discriminant_matrix(&joint, &linear)?;
    if !disc_r.is_psd() {
        return Err(Error::Invariant(
            "completed joint discriminant is not PSD".into(),
        ));
    }

    let mut names: Vec<String> = prob.shared.names().to_vec();
    names.extend_from_slice(prob.left.names());
    names.extend_from_slice(prob.right.names());
    let vars = VariableSet::new(names)?;
    let r = quadratic_from_blocks(&vars, &joint, &linear)?.scale(&c0);
    check_marginals(&r, p, q, &prob.left, &prob.right)?;
    if r.degree().unwrap_or(0) > 2 {
        return Err(Error::Invariant("quadratic amalgam degree exceeds 2".into()));
    }
    Ok(r)
}

fn map_q_index(i: usize, l: usize, m: usize) -> usize {
    if i < l {
        i
    } else {
        i + m
    }
}

/// `v^T M v + a^T v + 1` as a polynomial.
fn quadratic_from_blocks(
    vars: &VariableSet,
    form: &SymmetricMatrixQ,
    linear: &[Rational],
) -> Result<Polynomial> {
    let n = vars.len();
    let mut terms: Vec<(Vec<u32>, Rational)> = vec![(vec![0; n], Rational::one())];
    for i in 0..n {
        terms.push({
            let mut e = vec![0; n];
            e[i] = 1;
            (e, linear[i].clone())
        });
        terms.push({
            let mut e = vec![0; n];
            e[i] = 2;
            (e, form.entry(i, i).clone())
        });
        for j in i + 1..n {
            let mut e = vec![0; n];
            e[i] = 1;
            e[j] = 1;
            terms.push((e, form.entry(i, j) * q(2)));
        }
    }
    Polynomial::from_terms(vars.clone(), terms)
}

// ---------------------------------------------------------------------------
// Determinantal gluing
// ---------------------------------------------------------------------------

/// Amalgam of two polynomials given by simultaneous determinantal
/// representations: the caller supplies the same shared matrices for both
/// sides, and the glued determinant restricts to each side exactly.
pub fn amalgamate_determinantal(
    shared: &[(String, SymmetricMatrixQ)],
    left: &[(String, SymmetricMatrixQ)],
    right: &[(String, SymmetricMatrixQ)],
) -> Result<Polynomial> {
    let all: Vec<(String, SymmetricMatrixQ)> = shared
        .iter()
        .chain(left)
        .chain(right)
        .cloned()
        .collect();
    let r = det_polynomial(&all)?;
    let p = det_polynomial(
        &shared
            .iter()
            .chain(left)
            .cloned()
            .collect::<Vec<_>>(),
    )?;
    let q = det_polynomial(
        &shared
            .iter()
            .chain(right)
            .cloned()
            .collect::<Vec<_>>(),
    )?;
    let left_vs = VariableSet::new(left.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>())?;
    let right_vs = VariableSet::new(right.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>())?;
    check_marginals(&r, &p, &q, &left_vs, &right_vs)?;
    Ok(r)
}

// ---------------------------------------------------------------------------
// Averaging identities
// ---------------------------------------------------------------------------

const MAX_FACTORIAL_GUARD: usize = 6;

/// Exact check of the polarized derivative identity
/// `sum_{i+j=d} d_s^i d_t^j prod (s+a) prod (t+b) =
///  sum_{sigma} prod_i (s + t + a_i + b_{sigma(i)})`.
pub fn walsh_identity_check(a: &[Rational], b: &[Rational]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::ArityMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    let d = a.len();
    if d > MAX_FACTORIAL_GUARD {
        return Err(Error::GuardExceeded(format!(
            "identity check limited to degree {MAX_FACTORIAL_GUARD}"
        )));
    }
    let vars = VariableSet::new(["s", "t"])?;
    let s = Polynomial::variable(vars.clone(), "s")?;
    let t = Polynomial::variable(vars.clone(), "t")?;
    let constant = |c: &Rational| Polynomial::constant(vars.clone(), c.clone());

    let mut prod = Polynomial::one(vars.clone());
    for ai in a {
        prod = prod.mul(&s.add(&constant(ai)));
    }
    for bi in b {
        prod = prod.mul(&t.add(&constant(bi)));
    }
    let mut lhs = Polynomial::zero(vars.clone());
    let mut ds = prod;
    for i in 0..=d {
        lhs = lhs.add(&ds.partial_derivative("t", (d - i) as u32)?);
        if i < d {
            ds = ds.partial_derivative("s", 1)?;
        }
    }

    let mut rhs = Polynomial::zero(vars.clone());
    let st = s.add(&t);
    for perm in (0..d).permutations(d) {
        let mut term = Polynomial::one(vars.clone());
        for (i, &pi) in perm.iter().enumerate() {
            term = term.mul(&st.add(&constant(&(&a[i] + &b[pi]))));
        }
        rhs = rhs.add(&term);
    }
    Ok(lhs == rhs)
}

/// `sum_{P} det(A + P^T D P)` over all permutation matrices.
pub fn permutation_det_sum(a: &SymmetricMatrixQ, d: &SymmetricMatrixQ) -> Result<Rational> {
    permutation_det_sum_conjugated(a, d, &MatQ::identity(a.dim()))
}

/// `sum_{P} det(A + U^T P^T D P U)` for a fixed conjugation `U`.
pub fn permutation_det_sum_conjugated(
    a: &SymmetricMatrixQ,
    d: &SymmetricMatrixQ,
    u: &MatQ,
) -> Result<Rational> {
    let n = a.dim();
    if d.dim() != n || u.rows() != n || u.cols() != n {
        return Err(Error::DimensionMismatch(
            "permutation averaging needs equal dimensions".into(),
        ));
    }
    if !d.is_diagonal() {
        return Err(Error::Precondition("second matrix must be diagonal".into()));
    }
    if n > MAX_FACTORIAL_GUARD {
        return Err(Error::GuardExceeded(format!(
            "permutation sum limited to dimension {MAX_FACTORIAL_GUARD}"
        )));
    }
    let diag: Vec<Rational> = (0..n).map(|i| d.entry(i, i).clone()).collect();
    let mut acc = Rational::zero();
    for perm in (0..n).permutations(n) {
        // P^T D P permutes the diagonal entries.
        let permuted: Vec<Rational> = (0..n).map(|i| diag[perm[i]].clone()).collect();
        let conj = u
            .transpose()
            .mul(SymmetricMatrixQ::diagonal(&permuted).as_mat())?
            .mul(u)?;
        acc += a.as_mat().add(&conj)?.det()?;
    }
    Ok(acc)
}

/// `(1/d!) * sum_P det(A + P^T D P)`, the discrete form of the orthogonal
/// average.
pub fn permutation_average(a: &SymmetricMatrixQ, d: &SymmetricMatrixQ) -> Result<Rational> {
    Ok(permutation_det_sum(a, d)? * factorial(a.dim()).recip())
}

#[cfg(test)]
mod tests;
