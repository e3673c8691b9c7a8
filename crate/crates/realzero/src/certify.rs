//! Real-zero and stability verdicts.
//!
//! Exact criteria are used wherever available (quadratics via the
//! discriminant matrix, PSD via characteristic signs, SOS identities by
//! exact expansion). Everything else is a seeded semidecision: lines are
//! probed with exact rational directions and each probe is decided exactly
//! through Sturm chains, so a `Refuted` verdict always carries a witness
//! that re-checks exactly, while the absence of a witness only ever yields
//! `Probable` or `Unknown`.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec;
use crate::matrix::{MatQ, SymmetricMatrixQ};
use crate::poly::{Polynomial, VariableSet};
use crate::rational::{parse_rational, q, qr, Rational};
use crate::realroot::{count_real_roots, is_real_rooted};

pub use crate::matrix::det_polynomial;

/// Verdict lattice, ordered `Refuted < Unknown < Probable < Certified`.
/// Trees of obligations aggregate by minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Status {
    Refuted,
    Unknown,
    Probable,
    Certified,
}

/// Machine-checkable evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Polynomial vanishes at the origin.
    Origin,
    /// Direction `a` whose line restriction `p(ta)` is not real-rooted.
    Direction(Vec<Rational>),
    /// Line `t -> ta + b` whose restriction is not real-rooted.
    Line { a: Vec<Rational>, b: Vec<Rational> },
    /// Point with a negative value.
    Point(Vec<Rational>),
    /// Free-form note (e.g. which certificate closed an obligation).
    Note(String),
}

impl Witness {
    pub fn describe(&self) -> String {
        fn vec(v: &[Rational]) -> String {
            let inner: Vec<String> = v.iter().map(ToString::to_string).collect();
            format!("({})", inner.join(", "))
        }
        match self {
            Witness::Origin => "polynomial vanishes at the origin".to_string(),
            Witness::Direction(a) => format!("direction a = {}", vec(a)),
            Witness::Line { a, b } => format!("line a = {}, b = {}", vec(a), vec(b)),
            Witness::Point(p) => format!("point {}", vec(p)),
            Witness::Note(s) => s.clone(),
        }
    }
}

/// Outcome of a test, with optional witness and the number of probes used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    pub samples_used: usize,
}

impl Verdict {
    pub fn certified() -> Self {
        Verdict {
            status: Status::Certified,
            witness: None,
            samples_used: 0,
        }
    }

    pub fn refuted(w: Witness, samples: usize) -> Self {
        Verdict {
            status: Status::Refuted,
            witness: Some(w),
            samples_used: samples,
        }
    }

    pub fn probable(samples: usize) -> Self {
        Verdict {
            status: Status::Probable,
            witness: None,
            samples_used: samples,
        }
    }

    pub fn unknown(samples: usize) -> Self {
        Verdict {
            status: Status::Unknown,
            witness: None,
            samples_used: samples,
        }
    }
}

// ---------------------------------------------------------------------------
// Seeded rational sampling
// ---------------------------------------------------------------------------

/// Per-probe RNG: one ChaCha stream per probe index, so parallel execution
/// sees exactly the same draws as sequential.
pub(crate) fn probe_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Rational `u/v` with `u` in [-100, 100] and `v` in [1, 10].
pub(crate) fn sample_rational(rng: &mut ChaCha8Rng) -> Rational {
    q(rng.gen_range(-100..=100)) / q(rng.gen_range(1..=10))
}

fn sample_direction(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    loop {
        let v: Vec<Rational> = (0..n).map(|_| sample_rational(rng)).collect();
        if n == 0 || v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// Strictly positive entries: absolute value with a 1/100 floor.
fn sample_positive(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    let floor = qr(1, 100);
    (0..n)
        .map(|_| {
            let r = sample_rational(rng).abs();
            if r < floor {
                floor.clone()
            } else {
                r
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Quadratic real zero: exact
// ---------------------------------------------------------------------------

/// Quadratic form data of `p/p(0) = x^T A x + b^T x + 1`.
pub(crate) fn quadratic_blocks(p: &Polynomial) -> Result<(SymmetricMatrixQ, Vec<Rational>)> {
    if p.degree().is_some_and(|d| d > 2) {
        return Err(Error::Precondition("polynomial degree exceeds 2".into()));
    }
    let c0 = p.constant_term();
    if c0.is_zero() {
        return Err(Error::Precondition("polynomial vanishes at the origin".into()));
    }
    let p = p.scale(&c0.recip());
    let names = p.vars().names().to_vec();
    let n = names.len();
    let half = qr(1, 2);
    let mut a = MatQ::zero(n, n);
    let mut b = vec![Rational::zero(); n];
    for i in 0..n {
        b[i] = p.coeff_of(&[(&names[i], 1)])?;
        a[(i, i)] = p.coeff_of(&[(&names[i], 2)])?;
        for j in 0..i {
            let c = p.coeff_of(&[(&names[i], 1), (&names[j], 1)])?;
            a[(i, j)] = &c * &half;
            a[(j, i)] = a[(i, j)].clone();
        }
    }
    Ok((SymmetricMatrixQ::new(a)?, b))
}

/// Exact real-zero decision for polynomials of degree at most two:
/// `p` is real zero iff `b b^T - 4A` is positive semidefinite. A refutation
/// carries a direction on which the discriminant form is negative.
pub fn quadratic_real_zero(p: &Polynomial) -> Result<Verdict> {
    let (a, b) = quadratic_blocks(p)?;
    let disc = discriminant_matrix(&a, &b)?;
    if disc.is_psd() {
        return Ok(Verdict::certified());
    }
    let (t, d) = disc.diagonalize_congruence();
    let i = d
        .iter()
        .position(Signed::is_negative)
        .ok_or_else(|| Error::Invariant("indefinite matrix with no negative diagonal".into()))?;
    let dir: Vec<Rational> = (0..disc.dim()).map(|r| t[(r, i)].clone()).collect();
    // The witness direction must fail the line test exactly.
    debug_assert!(!is_real_rooted(
        &p.restrict_line(&dir, &vec![Rational::zero(); dir.len()])
            .expect("dimension checked")
    ));
    Ok(Verdict::refuted(Witness::Direction(dir), 0))
}

/// `b b^T - 4 A`.
pub(crate) fn discriminant_matrix(
    a: &SymmetricMatrixQ,
    b: &[Rational],
) -> Result<SymmetricMatrixQ> {
    let col = MatQ::column(b);
    let bbt = col.mul(&col.transpose())?;
    SymmetricMatrixQ::new(bbt.sub(&a.as_mat().scale(&q(4)))?)
}

// ---------------------------------------------------------------------------
// Sampled semidecisions
// ---------------------------------------------------------------------------

/// Seeded real-zero probe: checks `p(ta)` for `n` exact rational
/// directions. Refutes on the first failing line (smallest probe index),
/// otherwise returns `Probable(n)`.
pub fn real_zero_sample(p: &Polynomial, n: usize, seed: u64) -> Result<Verdict> {
    real_zero_sample_impl(p, n, seed, true)
}

/// Sequential reference path of [`real_zero_sample`].
pub fn real_zero_sample_sequential(p: &Polynomial, n: usize, seed: u64) -> Result<Verdict> {
    real_zero_sample_impl(p, n, seed, false)
}

fn real_zero_sample_impl(p: &Polynomial, n: usize, seed: u64, parallel: bool) -> Result<Verdict> {
    if p.constant_term().is_zero() {
        return Ok(Verdict::refuted(Witness::Origin, 0));
    }
    let nv = p.vars().len();
    let zero = vec![Rational::zero(); nv];
    let probe = |i: usize| {
        let mut rng = probe_rng(seed, i);
        let a = sample_direction(&mut rng, nv);
        let f = p.restrict_line(&a, &zero).expect("dimensions match");
        if is_real_rooted(&f) {
            None
        } else {
            Some(a)
        }
    };
    let hit = if parallel {
        exec::first_hit(n, probe)
    } else {
        exec::first_hit_seq(n, probe)
    };
    Ok(match hit {
        Some((i, a)) => Verdict::refuted(Witness::Direction(a), i + 1),
        None => Verdict::probable(n),
    })
}

/// Seeded stability probe: checks `p(ta + b)` for `n` exact pairs with `a`
/// strictly positive. Refutes on the first failing line, otherwise
/// `Probable(n)`.
pub fn stable_sample(p: &Polynomial, n: usize, seed: u64) -> Result<Verdict> {
    stable_sample_impl(p, n, seed, true)
}

/// Sequential reference path of [`stable_sample`].
pub fn stable_sample_sequential(p: &Polynomial, n: usize, seed: u64) -> Result<Verdict> {
    stable_sample_impl(p, n, seed, false)
}

fn stable_sample_impl(p: &Polynomial, n: usize, seed: u64, parallel: bool) -> Result<Verdict> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let nv = p.vars().len();
    let probe = |i: usize| {
        let mut rng = probe_rng(seed, i);
        let a = sample_positive(&mut rng, nv);
        let b: Vec<Rational> = (0..nv).map(|_| sample_rational(&mut rng)).collect();
        let f = p.restrict_line(&a, &b).expect("dimensions match");
        if is_real_rooted(&f) {
            None
        } else {
            Some((a, b))
        }
    };
    let hit = if parallel {
        exec::first_hit(n, probe)
    } else {
        exec::first_hit_seq(n, probe)
    };
    Ok(match hit {
        Some((i, (a, b))) => Verdict::refuted(Witness::Line { a, b }, i + 1),
        None => Verdict::probable(n),
    })
}

// ---------------------------------------------------------------------------
// Rayleigh differences and SOS certificates
// ---------------------------------------------------------------------------

/// `(d_i p)(d_j p) - p * d_i d_j p` for a multi-affine polynomial. The
/// result involves neither `x_i` nor `x_j`.
pub fn rayleigh(p: &Polynomial, i: &str, j: &str) -> Result<Polynomial> {
    if !p.is_multi_affine() {
        return Err(Error::NotMultiAffine);
    }
    if i == j {
        return Err(Error::Precondition("Rayleigh pair needs distinct variables".into()));
    }
    let di = p.partial_derivative(i, 1)?;
    let dj = p.partial_derivative(j, 1)?;
    let dij = di.partial_derivative(j, 1)?;
    let out = di.mul(&dj).sub(&p.mul(&dij));
    debug_assert!(!out
        .occurring_variables()
        .iter()
        .any(|v| v == i || v == j));
    Ok(out)
}

/// Weighted sum of squares; weights are positive rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SosCertificate {
    squares: Vec<(Rational, Polynomial)>,
}

impl SosCertificate {
    pub fn new(squares: Vec<(Rational, Polynomial)>) -> Result<Self> {
        for (w, _) in &squares {
            if !w.is_positive() {
                return Err(Error::Precondition(format!("non-positive SOS weight {w}")));
            }
        }
        Ok(SosCertificate { squares })
    }

    pub fn squares(&self) -> &[(Rational, Polynomial)] {
        &self.squares
    }

    /// The certified polynomial `sum w_i q_i^2`.
    pub fn expand(&self) -> Polynomial {
        let mut acc: Option<Polynomial> = None;
        for (w, poly) in &self.squares {
            let sq = poly.mul(poly).scale(w);
            acc = Some(match acc {
                None => sq,
                Some(a) => a.add(&sq),
            });
        }
        acc.unwrap_or_else(|| Polynomial::zero(VariableSet::new(Vec::<String>::new()).unwrap()))
    }
}

/// A target polynomial together with an SOS certificate for it; this is
/// the on-disk JSON form (`{"target": ..., "squares": [{"w", "q"}, ...]}`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifiedIdentity {
    pub target: Polynomial,
    pub certificate: SosCertificate,
}

#[derive(Serialize, Deserialize)]
struct JsonSquare {
    w: String,
    q: Polynomial,
}

#[derive(Serialize, Deserialize)]
struct JsonIdentity {
    target: Polynomial,
    squares: Vec<JsonSquare>,
}

impl Serialize for CertifiedIdentity {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonIdentity {
            target: self.target.clone(),
            squares: self
                .certificate
                .squares
                .iter()
                .map(|(w, p)| JsonSquare {
                    w: w.to_string(),
                    q: p.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CertifiedIdentity {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = JsonIdentity::deserialize(d)?;
        let squares = raw
            .squares
            .into_iter()
            .map(|s| Ok((parse_rational(&s.w).map_err(D::Error::custom)?, s.q)))
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        Ok(CertifiedIdentity {
            target: raw.target,
            certificate: SosCertificate::new(squares).map_err(D::Error::custom)?,
        })
    }
}

/// Difference `target - sum w_i q_i^2`, identically zero when the
/// certificate verifies.
pub fn sos_defect(target: &Polynomial, cert: &SosCertificate) -> Polynomial {
    target.sub(&cert.expand())
}

/// Exact check that `target = sum w_i q_i^2`.
pub fn verify_sos(target: &Polynomial, cert: &SosCertificate) -> bool {
    sos_defect(target, cert).is_zero()
}

// ---------------------------------------------------------------------------
// Global nonnegativity
// ---------------------------------------------------------------------------

/// Certifies global nonnegativity via an SOS certificate or the all-even-
/// exponent shortcut, refutes by locating a negative value, and otherwise
/// stays `Unknown`. Plain nonnegative coefficients are deliberately not
/// accepted: `x2*x4` has nonnegative coefficients and is negative at
/// `(1, -1)`.
pub fn global_nonneg(
    p: &Polynomial,
    cert: Option<&SosCertificate>,
    n: usize,
    seed: u64,
) -> Verdict {
    if let Some(c) = cert {
        if verify_sos(p, c) {
            return Verdict {
                status: Status::Certified,
                witness: Some(Witness::Note("sum-of-squares certificate".into())),
                samples_used: 0,
            };
        }
    }
    let even_form = p
        .terms()
        .all(|(m, c)| m.exponents().iter().all(|e| e % 2 == 0) && !c.is_negative());
    if even_form {
        return Verdict::certified();
    }
    let nv = p.vars().len();
    for i in 0..n {
        let mut rng = probe_rng(seed, i);
        let point: Vec<Rational> = (0..nv).map(|_| sample_rational(&mut rng)).collect();
        if p.evaluate(&point).expect("dimensions match").is_negative() {
            return Verdict::refuted(Witness::Point(point), i + 1);
        }
    }
    Verdict::unknown(n)
}

// ---------------------------------------------------------------------------
// Wagner-Wei multi-affine stability criterion
// ---------------------------------------------------------------------------

/// Knobs for the recursive criterion's sampled obligations.
#[derive(Debug, Clone, Copy)]
pub struct WagnerWeiOptions {
    pub samples: usize,
    pub seed: u64,
}

impl Default for WagnerWeiOptions {
    fn default() -> Self {
        WagnerWeiOptions {
            samples: 64,
            seed: 7,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChildKind {
    Derivative,
    SetZero,
}

/// Edge to a child obligation; `node` is `None` when the child polynomial
/// is zero (treated as vacuously stable, flagged on the tree).
#[derive(Debug, Clone)]
pub struct ChildRef {
    pub kind: ChildKind,
    pub var: String,
    pub node: Option<usize>,
}

/// How one Rayleigh existence obligation was resolved.
#[derive(Debug, Clone)]
pub struct RayleighResolution {
    /// Pair that settled the obligation, when one did.
    pub pair: Option<(String, String)>,
    /// Aggregate status: best status over the tried pairs.
    pub status: Status,
    /// Every tried pair with its individual status.
    pub tried: Vec<(String, String, Status)>,
    /// Refuting point for the strongest refutation, if all pairs refuted.
    pub witness: Option<Witness>,
    pub samples_used: usize,
}

/// One node of the obligation tree. The node's `status` is its local
/// Rayleigh obligation (leaves are `Certified`); the tree-wide verdict is
/// the minimum over all nodes.
#[derive(Debug, Clone)]
pub struct StabilityNode {
    pub poly: Polynomial,
    pub occurring: Vec<String>,
    pub status: Status,
    pub rayleigh: Option<RayleighResolution>,
    pub children: Vec<ChildRef>,
}

/// Obligation tree produced by [`wagner_wei_stable`]; nodes are shared, so
/// this is really a DAG rooted at `root`.
#[derive(Debug, Clone)]
pub struct StabilityTree {
    pub nodes: Vec<StabilityNode>,
    pub root: usize,
    /// Conventions the evaluation relied on (zero children treated as
    /// stable, criterion restricted to occurring variables). These flag
    /// every non-refuted verdict the tree yields.
    pub flags: Vec<String>,
}

impl StabilityTree {
    /// Weakest status in the tree.
    pub fn overall(&self) -> Status {
        self.nodes
            .iter()
            .map(|n| n.status)
            .min()
            .unwrap_or(Status::Certified)
    }

    pub fn root_status(&self) -> Status {
        self.nodes[self.root].status
    }

    pub fn any_refuted(&self) -> bool {
        self.nodes.iter().any(|n| n.status == Status::Refuted)
    }

    pub fn verdict(&self) -> Verdict {
        let status = self.overall();
        let witness = self
            .nodes
            .iter()
            .filter(|n| n.status == Status::Refuted)
            .find_map(|n| n.rayleigh.as_ref().and_then(|r| r.witness.clone()));
        Verdict {
            status,
            witness,
            samples_used: self
                .nodes
                .iter()
                .filter_map(|n| n.rayleigh.as_ref())
                .map(|r| r.samples_used)
                .sum(),
        }
    }
}

/// Recursive multi-affine stability criterion for polynomials with
/// nonnegative coefficients: every derivative/restriction child must be
/// stable and at each node some Rayleigh difference must be globally
/// nonnegative. Rayleigh obligations are closed by a matching certificate
/// from `certs`, by the even-exponent shortcut, or remain `Unknown` after
/// sampling; all-pairs refutation makes the node `Refuted`.
///
/// The criterion is applied to the variables actually occurring, and a
/// zero child (a variable appearing in every term) is treated as stable,
/// following the convention of the criterion's source; both readings are
/// reported in the tree's `flags`.
pub fn wagner_wei_stable(
    p: &Polynomial,
    certs: &[CertifiedIdentity],
    opts: WagnerWeiOptions,
) -> Result<StabilityTree> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_multi_affine() {
        return Err(Error::NotMultiAffine);
    }
    if !p.has_nonnegative_coefficients() {
        return Err(Error::Precondition(
            "criterion requires nonnegative coefficients".into(),
        ));
    }
    let mut builder = WwBuilder {
        certs,
        opts,
        nodes: Vec::new(),
        memo: HashMap::new(),
        flags: Vec::new(),
    };
    if p.occurring_variables().len() < p.vars().len() {
        builder.flag("criterion restricted to occurring variables");
    }
    let root = builder.build(p);
    Ok(StabilityTree {
        nodes: builder.nodes,
        root,
        flags: builder.flags,
    })
}

struct WwBuilder<'a> {
    certs: &'a [CertifiedIdentity],
    opts: WagnerWeiOptions,
    nodes: Vec<StabilityNode>,
    memo: HashMap<Polynomial, usize>,
    flags: Vec<String>,
}

impl WwBuilder<'_> {
    fn flag(&mut self, msg: &str) {
        if !self.flags.iter().any(|f| f == msg) {
            self.flags.push(msg.to_string());
        }
    }

    fn build(&mut self, p: &Polynomial) -> usize {
        if let Some(&i) = self.memo.get(p) {
            return i;
        }
        let occurring = p.occurring_variables();
        let idx = self.nodes.len();
        self.nodes.push(StabilityNode {
            poly: p.clone(),
            occurring: occurring.clone(),
            status: Status::Certified,
            rayleigh: None,
            children: Vec::new(),
        });
        self.memo.insert(p.clone(), idx);
        if occurring.len() <= 1 {
            return idx;
        }
        let mut children = Vec::new();
        for v in &occurring {
            let d = p.partial_derivative(v, 1).expect("occurring variable");
            children.push(ChildRef {
                kind: ChildKind::Derivative,
                var: v.clone(),
                node: Some(self.build(&d)),
            });
            let z = p
                .substitute_value(v, &Rational::zero())
                .expect("occurring variable");
            let node = if z.is_zero() {
                self.flag("zero child treated as stable");
                None
            } else {
                Some(self.build(&z))
            };
            children.push(ChildRef {
                kind: ChildKind::SetZero,
                var: v.clone(),
                node,
            });
        }
        let resolution = self.resolve_rayleigh(p, &occurring);
        self.nodes[idx].status = resolution.status;
        self.nodes[idx].rayleigh = Some(resolution);
        self.nodes[idx].children = children;
        idx
    }

    fn resolve_rayleigh(&mut self, p: &Polynomial, occurring: &[String]) -> RayleighResolution {
        let mut tried = Vec::new();
        let mut best = Status::Refuted;
        let mut best_pair = None;
        let mut witness = None;
        let mut samples_used = 0;
        for i in 0..occurring.len() {
            for j in i + 1..occurring.len() {
                let (vi, vj) = (&occurring[i], &occurring[j]);
                let target = rayleigh(p, vi, vj).expect("multi-affine with distinct pair");
                let cert = self
                    .certs
                    .iter()
                    .find(|c| c.target.semantic_eq(&target))
                    .map(|c| &c.certificate);
                let verdict = global_nonneg(&target, cert, self.opts.samples, self.opts.seed);
                samples_used += verdict.samples_used;
                tried.push((vi.clone(), vj.clone(), verdict.status));
                if verdict.status > best {
                    best = verdict.status;
                    best_pair = Some((vi.clone(), vj.clone()));
                }
                if witness.is_none() && verdict.status == Status::Refuted {
                    witness = verdict.witness;
                }
                if best == Status::Certified {
                    return RayleighResolution {
                        pair: best_pair,
                        status: best,
                        tried,
                        witness: None,
                        samples_used,
                    };
                }
            }
        }
        RayleighResolution {
            pair: best_pair,
            status: best,
            tried,
            witness: if best == Status::Refuted { witness } else { None },
            samples_used,
        }
    }
}

// ---------------------------------------------------------------------------
// Rigid convexity
// ---------------------------------------------------------------------------

/// Exact membership test for the rigidly convex set of `p`: true when
/// `p(ta)` has no root on the open interval (0, 1).
pub fn rigidly_convex_contains(p: &Polynomial, a: &[Rational]) -> Result<bool> {
    if p.constant_term().is_zero() {
        return Err(Error::Precondition("polynomial vanishes at the origin".into()));
    }
    let zero = vec![Rational::zero(); p.vars().len()];
    let f = p.restrict_line(a, &zero)?;
    let roots = count_real_roots(
        &f,
        std::ops::Bound::Excluded(Rational::zero()),
        std::ops::Bound::Excluded(Rational::one()),
    )?;
    Ok(roots == 0)
}

/// Sufficient test that the nonnegative orthant lies in the rigidly convex
/// set: all coefficients nonnegative with a positive constant term keeps
/// `p(ta) >= p(0) > 0` on `[0, 1]` for every `a >= 0`. `false` only means
/// the test is inconclusive.
pub fn orthant_in_rigid_set(p: &Polynomial) -> bool {
    p.has_nonnegative_coefficients() && p.constant_term().is_positive()
}

#[cfg(test)]
mod tests;
