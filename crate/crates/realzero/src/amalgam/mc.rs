//! Monte Carlo average of `det(I + sum y B + U^T (sum z C) U)` over Haar
//! orthogonal `U`.
//!
//! This is the only floating-point corner of the crate: per-sample
//! determinants are expanded symbolically in the outer variables with
//! `f64` coefficients and averaged coefficient-wise. Samples are seeded
//! per index (one ChaCha stream each) and summed in index order, so the
//! result does not depend on the thread count.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::exec;
use crate::matrix::SymmetricMatrixQ;
use crate::poly::{Monomial, VariableSet};
use crate::rational::to_f64;

/// Polynomial with double-precision coefficients; never compared by exact
/// equality.
#[derive(Debug, Clone)]
pub struct FloatPolynomial {
    vars: VariableSet,
    terms: BTreeMap<Monomial, f64>,
}

impl FloatPolynomial {
    pub fn zero(vars: VariableSet) -> Self {
        FloatPolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: VariableSet, c: f64) -> Self {
        let mut p = FloatPolynomial::zero(vars);
        if c != 0.0 {
            p.terms.insert(Monomial::constant(p.vars.len()), c);
        }
        p
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &f64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> f64 {
        self.terms.get(m).copied().unwrap_or(0.0)
    }

    fn add_term(&mut self, m: Monomial, c: f64) {
        if c == 0.0 {
            return;
        }
        *self.terms.entry(m).or_insert(0.0) += c;
    }

    pub fn add(&self, rhs: &FloatPolynomial) -> FloatPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), *c);
        }
        out
    }

    pub fn sub(&self, rhs: &FloatPolynomial) -> FloatPolynomial {
        self.add(&rhs.scale(-1.0))
    }

    pub fn scale(&self, c: f64) -> FloatPolynomial {
        FloatPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &FloatPolynomial) -> FloatPolynomial {
        let mut out = FloatPolynomial::zero(self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let exps: Vec<u32> = ma
                    .exponents()
                    .iter()
                    .zip(mb.exponents())
                    .map(|(x, y)| x + y)
                    .collect();
                out.add_term(Monomial::new(exps), ca * cb);
            }
        }
        out
    }

    /// Largest absolute coefficient difference over the union of supports.
    pub fn max_abs_diff(&self, rhs: &FloatPolynomial) -> f64 {
        let mut worst: f64 = 0.0;
        for (m, c) in &self.terms {
            worst = worst.max((c - rhs.coeff(m)).abs());
        }
        for (m, c) in &rhs.terms {
            worst = worst.max((c - self.coeff(m)).abs());
        }
        worst
    }
}

/// Coefficient-wise mean and standard error of the sampled determinants.
#[derive(Debug, Clone)]
pub struct McEstimate {
    pub mean: FloatPolynomial,
    pub stderr: FloatPolynomial,
    pub samples: usize,
}

const MAX_DIM: usize = 5;
const MAX_BLOCK: usize = 2;

/// Haar-distributed orthogonal matrix: QR of a standard Gaussian matrix
/// with the sign convention that R has a positive diagonal (modified
/// Gram-Schmidt produces exactly that).
fn haar_orthogonal(rng: &mut ChaCha8Rng, d: usize) -> Vec<Vec<f64>> {
    loop {
        let g: Vec<Vec<f64>> = (0..d)
            .map(|_| (0..d).map(|_| StandardNormal.sample(rng)).collect())
            .collect();
        // Columns of g, orthonormalized in order.
        let mut q: Vec<Vec<f64>> = Vec::with_capacity(d);
        let mut degenerate = false;
        for j in 0..d {
            let mut v: Vec<f64> = (0..d).map(|i| g[i][j]).collect();
            for col in &q {
                let r: f64 = col.iter().zip(&v).map(|(a, b)| a * b).sum();
                for (vi, ci) in v.iter_mut().zip(col) {
                    *vi -= r * ci;
                }
            }
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm < 1e-12 {
                degenerate = true;
                break;
            }
            q.push(v.into_iter().map(|x| x / norm).collect());
        }
        if degenerate {
            continue; // zero-probability event, resample
        }
        // q holds columns; return as a row-major matrix.
        return (0..d)
            .map(|i| (0..d).map(|j| q[j][i]).collect())
            .collect();
    }
}

fn to_float(m: &SymmetricMatrixQ) -> Vec<Vec<f64>> {
    let d = m.dim();
    (0..d)
        .map(|i| (0..d).map(|j| to_f64(m.entry(i, j))).collect())
        .collect()
}

/// One sampled determinant, expanded symbolically in the outer variables.
fn sample_determinant(
    y_blocks: &[Vec<Vec<f64>>],
    z_blocks: &[Vec<Vec<f64>>],
    u: &[Vec<f64>],
    vars: &VariableSet,
    d: usize,
) -> FloatPolynomial {
    let nv = vars.len();
    let m = y_blocks.len();
    // U^T C_k U for each z block.
    let conj: Vec<Vec<Vec<f64>>> = z_blocks
        .iter()
        .map(|c| {
            let cu: Vec<Vec<f64>> = (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| (0..d).map(|k| c[i][k] * u[k][j]).sum())
                        .collect()
                })
                .collect();
            (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| (0..d).map(|k| u[k][i] * cu[k][j]).sum())
                        .collect()
                })
                .collect()
        })
        .collect();
    let entry = |i: usize, j: usize| -> FloatPolynomial {
        let mut p = FloatPolynomial::constant(vars.clone(), if i == j { 1.0 } else { 0.0 });
        for (v, block) in y_blocks.iter().enumerate() {
            let mut exps = vec![0u32; nv];
            exps[v] = 1;
            p.add_term(Monomial::new(exps), block[i][j]);
        }
        for (v, block) in conj.iter().enumerate() {
            let mut exps = vec![0u32; nv];
            exps[m + v] = 1;
            p.add_term(Monomial::new(exps), block[i][j]);
        }
        p
    };
    float_det(d, vars, &entry)
}

/// Laplace expansion with memoization over column subsets.
fn float_det<F: Fn(usize, usize) -> FloatPolynomial>(
    d: usize,
    vars: &VariableSet,
    entry: &F,
) -> FloatPolynomial {
    use std::collections::HashMap;
    fn minor<F: Fn(usize, usize) -> FloatPolynomial>(
        cols: u32,
        entry: &F,
        memo: &mut HashMap<u32, FloatPolynomial>,
        vars: &VariableSet,
    ) -> FloatPolynomial {
        if cols == 0 {
            return FloatPolynomial::constant(vars.clone(), 1.0);
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let row = cols.count_ones() as usize - 1;
        let mut acc = FloatPolynomial::zero(vars.clone());
        let mut positive = row % 2 == 0;
        let mut rest = cols;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let e = entry(row, j);
            let sub = minor(cols & !(1 << j), entry, memo, vars);
            let term = e.mul(&sub);
            acc = if positive { acc.add(&term) } else { acc.sub(&term) };
            positive = !positive;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    if d == 0 {
        return FloatPolynomial::constant(vars.clone(), 1.0);
    }
    let mut memo = HashMap::new();
    minor((1u32 << d) - 1, entry, &mut memo, vars)
}

/// Monte Carlo estimate of the orthogonal-group average of
/// `det(I + sum y B + U^T (sum z C) U)`, with a per-coefficient standard
/// error. Guarded to dimension 5 and at most two matrices per block.
pub fn mc_orthogonal_amalgam(
    y_mats: &[(String, SymmetricMatrixQ)],
    z_mats: &[(String, SymmetricMatrixQ)],
    samples: usize,
    seed: u64,
) -> Result<McEstimate> {
    mc_impl(y_mats, z_mats, samples, seed, true)
}

/// Sequential reference path of [`mc_orthogonal_amalgam`].
pub fn mc_orthogonal_amalgam_sequential(
    y_mats: &[(String, SymmetricMatrixQ)],
    z_mats: &[(String, SymmetricMatrixQ)],
    samples: usize,
    seed: u64,
) -> Result<McEstimate> {
    mc_impl(y_mats, z_mats, samples, seed, false)
}

fn mc_impl(
    y_mats: &[(String, SymmetricMatrixQ)],
    z_mats: &[(String, SymmetricMatrixQ)],
    samples: usize,
    seed: u64,
    parallel: bool,
) -> Result<McEstimate> {
    if samples == 0 {
        return Err(Error::Precondition("at least one sample required".into()));
    }
    if y_mats.len() > MAX_BLOCK || z_mats.len() > MAX_BLOCK {
        return Err(Error::GuardExceeded(format!(
            "at most {MAX_BLOCK} matrices per block"
        )));
    }
    let dims: Vec<usize> = y_mats
        .iter()
        .chain(z_mats)
        .map(|(_, m)| m.dim())
        .collect();
    let Some(&d) = dims.first() else {
        let vars = VariableSet::new(Vec::<String>::new())?;
        return Ok(McEstimate {
            mean: FloatPolynomial::constant(vars.clone(), 1.0),
            stderr: FloatPolynomial::zero(vars),
            samples,
        });
    };
    if dims.iter().any(|&x| x != d) {
        return Err(Error::DimensionMismatch(
            "all matrices must share one dimension".into(),
        ));
    }
    if d > MAX_DIM {
        return Err(Error::GuardExceeded(format!(
            "orthogonal averaging limited to dimension {MAX_DIM}"
        )));
    }
    let names: Vec<String> = y_mats
        .iter()
        .chain(z_mats)
        .map(|(n, _)| n.clone())
        .collect();
    let vars = VariableSet::new(names)?;
    let y_blocks: Vec<Vec<Vec<f64>>> = y_mats.iter().map(|(_, m)| to_float(m)).collect();
    let z_blocks: Vec<Vec<Vec<f64>>> = z_mats.iter().map(|(_, m)| to_float(m)).collect();

    let draw = |k: usize| -> BTreeMap<Monomial, f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(k as u64);
        let u = haar_orthogonal(&mut rng, d);
        sample_determinant(&y_blocks, &z_blocks, &u, &vars, d)
            .terms
            .into_iter()
            .collect()
    };
    let per_sample: Vec<BTreeMap<Monomial, f64>> = if parallel {
        exec::map_collect(samples, draw)
    } else {
        exec::map_collect_seq(samples, draw)
    };

    let mut support: std::collections::BTreeSet<Monomial> = std::collections::BTreeSet::new();
    for s in &per_sample {
        support.extend(s.keys().cloned());
    }
    let mut mean = FloatPolynomial::zero(vars.clone());
    let mut stderr = FloatPolynomial::zero(vars.clone());
    let n = samples as f64;
    for m in support {
        let values: Vec<f64> = per_sample
            .iter()
            .map(|s| s.get(&m).copied().unwrap_or(0.0))
            .collect();
        // Bitwise-constant samples (no dependence on U) have no error.
        let constant = values.windows(2).all(|w| w[0] == w[1]);
        let avg = if constant {
            values[0]
        } else {
            values.iter().sum::<f64>() / n
        };
        let se = if samples > 1 && !constant {
            let var = values.iter().map(|x| (x - avg) * (x - avg)).sum::<f64>() / (n - 1.0);
            (var / n).sqrt()
        } else {
            0.0
        };
        mean.terms.insert(m.clone(), avg);
        stderr.terms.insert(m, se);
    }
    Ok(McEstimate {
        mean,
        stderr,
        samples,
    })
}
