//! Exact rational matrices: determinants, characteristic polynomials, PSD
//! decisions and symbolic determinant expansion.
//!
//! The PSD test is sign-based: a symmetric rational matrix is positive
//! semidefinite exactly when every coefficient of `det(tI + M)` is
//! nonnegative, because the characteristic roots are real. No pivoting or
//! perturbation is involved, so the decision is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, UnivariatePolynomial, VariableSet};
use crate::rational::{parse_rational, q, Rational};

/// Rectangular rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatQ {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl MatQ {
    pub fn zero(rows: usize, cols: usize) -> Self {
        MatQ {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = MatQ::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(MatQ {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Rational>(
        rows: usize,
        cols: usize,
        mut f: F,
    ) -> Self {
        let mut m = MatQ::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn column(v: &[Rational]) -> Self {
        MatQ {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> MatQ {
        MatQ::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &MatQ) -> Result<MatQ> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(MatQ::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                acc += &self[(i, k)] * &rhs[(k, j)];
            }
            acc
        }))
    }

    pub fn add(&self, rhs: &MatQ) -> Result<MatQ> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch("matrix addition".into()));
        }
        Ok(MatQ::from_fn(self.rows, self.cols, |i, j| {
            &self[(i, j)] + &rhs[(i, j)]
        }))
    }

    pub fn sub(&self, rhs: &MatQ) -> Result<MatQ> {
        self.add(&rhs.scale(&q(-1)))
    }

    pub fn scale(&self, c: &Rational) -> MatQ {
        MatQ::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * c)
    }

    pub fn block(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> MatQ {
        MatQ::from_fn(rows, cols, |i, j| self[(row0 + i, col0 + j)].clone())
    }

    /// Exact determinant via fraction-free (Bareiss) elimination after
    /// row-wise denominator clearing.
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("determinant of non-square".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        // Clear denominators row by row; det is multilinear in the rows.
        let mut scale = Rational::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let lcm = (0..n).fold(BigInt::one(), |acc, j| acc.lcm(self[(i, j)].denom()));
            scale *= Rational::new(BigInt::one(), lcm.clone());
            m.push(
                (0..n)
                    .map(|j| self[(i, j)].numer() * (&lcm / self[(i, j)].denom()))
                    .collect(),
            );
        }
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(Rational::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let mut det = Rational::from_integer(m[n - 1][n - 1].clone()) * scale;
        if sign < 0 {
            det = -det;
        }
        Ok(det)
    }

    /// Solves `self * X = rhs` exactly. Returns `None` when inconsistent;
    /// for singular but consistent systems an arbitrary solution (free
    /// variables set to zero) is returned.
    pub fn solve(&self, rhs: &MatQ) -> Result<Option<MatQ>> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch("solve: row counts differ".into()));
        }
        let (n, m, k) = (self.rows, self.cols, rhs.cols);
        let mut a = MatQ::from_fn(n, m + k, |i, j| {
            if j < m {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - m)].clone()
            }
        });
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..m {
            let Some(p) = (row..n).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            for j in 0..m + k {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(row, j)].clone();
                a[(row, j)] = tmp;
            }
            let inv = a[(row, col)].recip();
            for j in col..m + k {
                a[(row, j)] = &a[(row, j)] * &inv;
            }
            for r in 0..n {
                if r != row && !a[(r, col)].is_zero() {
                    let factor = a[(r, col)].clone();
                    for j in col..m + k {
                        let delta = &a[(row, j)] * &factor;
                        a[(r, j)] -= delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == n {
                break;
            }
        }
        // Inconsistent when a zeroed coefficient row keeps a nonzero
        // right-hand side.
        for r in row..n {
            for j in 0..k {
                if !a[(r, m + j)].is_zero() {
                    return Ok(None);
                }
            }
        }
        let mut x = MatQ::zero(m, k);
        for (r, &col) in pivots.iter().enumerate() {
            for j in 0..k {
                x[(col, j)] = a[(r, m + j)].clone();
            }
        }
        Ok(Some(x))
    }
}

impl std::ops::Index<(usize, usize)> for MatQ {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for MatQ {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Symmetric rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricMatrixQ {
    mat: MatQ,
}

impl SymmetricMatrixQ {
    pub fn new(mat: MatQ) -> Result<Self> {
        if mat.rows() != mat.cols() {
            return Err(Error::DimensionMismatch(
                "symmetric matrix must be square".into(),
            ));
        }
        for i in 0..mat.rows() {
            for j in 0..i {
                if mat[(i, j)] != mat[(j, i)] {
                    return Err(Error::Precondition(format!(
                        "matrix not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(SymmetricMatrixQ { mat })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        SymmetricMatrixQ::new(MatQ::from_rows(rows)?)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        SymmetricMatrixQ::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
        )
    }

    pub fn zero(n: usize) -> Self {
        SymmetricMatrixQ {
            mat: MatQ::zero(n, n),
        }
    }

    pub fn identity(n: usize) -> Self {
        SymmetricMatrixQ {
            mat: MatQ::identity(n),
        }
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let mut mat = MatQ::zero(d.len(), d.len());
        for (i, v) in d.iter().enumerate() {
            mat[(i, i)] = v.clone();
        }
        SymmetricMatrixQ { mat }
    }

    /// `(M + M^T)/2`; handy for building quadratic forms.
    pub fn symmetrized(mat: &MatQ) -> Result<Self> {
        if mat.rows() != mat.cols() {
            return Err(Error::DimensionMismatch("symmetrize non-square".into()));
        }
        let half = crate::rational::qr(1, 2);
        Ok(SymmetricMatrixQ {
            mat: mat.add(&mat.transpose())?.scale(&half),
        })
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.mat[(i, j)]
    }

    pub fn as_mat(&self) -> &MatQ {
        &self.mat
    }

    pub fn is_diagonal(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| i == j || self.mat[(i, j)].is_zero()))
    }

    pub fn det(&self) -> Rational {
        self.mat.det().expect("square by construction")
    }

    /// Coefficients of `det(tI + M)`, computed exactly: interpolation over
    /// fraction-free determinant evaluations up to dimension 12, a
    /// trace-based recurrence beyond that.
    pub fn char_poly(&self) -> UnivariatePolynomial {
        let n = self.dim();
        if n == 0 {
            return UnivariatePolynomial::from_i64(&[1]);
        }
        if n <= 12 {
            self.char_poly_interpolated()
        } else {
            self.char_poly_leverrier()
        }
    }

    fn char_poly_interpolated(&self) -> UnivariatePolynomial {
        let n = self.dim();
        // det(tI + M) is monic of degree n; n+1 points pin it down.
        let points: Vec<(Rational, Rational)> = (0..=n as i64)
            .map(|t| {
                let shifted = self
                    .mat
                    .add(&MatQ::identity(n).scale(&q(t)))
                    .expect("same shape");
                (q(t), shifted.det().expect("square"))
            })
            .collect();
        lagrange_interpolate(&points)
    }

    fn char_poly_leverrier(&self) -> UnivariatePolynomial {
        // Faddeev-LeVerrier on -M gives det(tI + M) with exact integer
        // divisions only.
        let n = self.dim();
        let a = self.mat.scale(&q(-1));
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut nmat = MatQ::identity(n);
        for k in 1..=n {
            let an = a.mul(&nmat).expect("square");
            let trace = (0..n).fold(Rational::zero(), |acc, i| acc + &an[(i, i)]);
            let c = -trace / q(k as i64);
            coeffs[n - k] = c.clone();
            nmat = an.add(&MatQ::identity(n).scale(&c)).expect("same shape");
        }
        UnivariatePolynomial::new(coeffs)
    }

    /// Exact positive semidefiniteness: all coefficients of `det(tI + M)`
    /// nonnegative.
    pub fn is_psd(&self) -> bool {
        self.char_poly().coeffs().iter().all(|c| !c.is_negative())
    }

    /// Congruence diagonalization: returns `(T, d)` with `T^T M T` diagonal
    /// with entries `d`. If `d[i] < 0` then the column `a = T e_i` has
    /// `a^T M a < 0`, an exact witness of indefiniteness.
    pub fn diagonalize_congruence(&self) -> (MatQ, Vec<Rational>) {
        let n = self.dim();
        let mut m = self.mat.clone();
        let mut t = MatQ::identity(n);
        let mut k = 0;
        while k < n {
            if m[(k, k)].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !m[(j, j)].is_zero()) {
                    swap_congruence(&mut m, &mut t, k, j);
                } else if let Some(j) = (k + 1..n).find(|&j| !m[(k, j)].is_zero()) {
                    // Zero diagonal with off-diagonal coupling: fold column
                    // j into column k to create a pivot.
                    let one = Rational::one();
                    col_axpy(&mut m, &mut t, k, j, &one);
                } else {
                    k += 1;
                    continue;
                }
            }
            let pivot = m[(k, k)].clone();
            for j in k + 1..n {
                if m[(k, j)].is_zero() {
                    continue;
                }
                let factor = -(&m[(k, j)] / &pivot);
                col_axpy(&mut m, &mut t, j, k, &factor);
            }
            k += 1;
        }
        let diag = (0..n).map(|i| m[(i, i)].clone()).collect();
        (t, diag)
    }
}

fn swap_congruence(m: &mut MatQ, t: &mut MatQ, a: usize, b: usize) {
    let n = m.rows();
    for i in 0..n {
        let tmp = m[(i, a)].clone();
        m[(i, a)] = m[(i, b)].clone();
        m[(i, b)] = tmp;
    }
    for j in 0..n {
        let tmp = m[(a, j)].clone();
        m[(a, j)] = m[(b, j)].clone();
        m[(b, j)] = tmp;
    }
    for i in 0..n {
        let tmp = t[(i, a)].clone();
        t[(i, a)] = t[(i, b)].clone();
        t[(i, b)] = tmp;
    }
}

/// Congruence `col_j += factor * col_k` (with the matching row update),
/// mirrored into the accumulated transform.
fn col_axpy(m: &mut MatQ, t: &mut MatQ, j: usize, k: usize, factor: &Rational) {
    let n = m.rows();
    for i in 0..n {
        let delta = &m[(i, k)] * factor;
        m[(i, j)] += delta;
    }
    for c in 0..n {
        let delta = &m[(k, c)] * factor;
        m[(j, c)] += delta;
    }
    for i in 0..n {
        let delta = &t[(i, k)] * factor;
        t[(i, j)] += delta;
    }
}

fn lagrange_interpolate(points: &[(Rational, Rational)]) -> UnivariatePolynomial {
    let mut acc = UnivariatePolynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = UnivariatePolynomial::constant(Rational::one());
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&UnivariatePolynomial::new(vec![
                -xj.clone(),
                Rational::one(),
            ]));
            denom *= xi - xj;
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    acc
}

/// Exact symbolic expansion of `det(I + sum_v v * M_v)` as a polynomial in
/// the named variables. All matrices must share one dimension; the empty
/// list yields the constant 1.
pub fn det_polynomial(mats: &[(String, SymmetricMatrixQ)]) -> Result<Polynomial> {
    let vars = VariableSet::new(mats.iter().map(|(n, _)| n.clone()))?;
    let Some(d) = mats.first().map(|(_, m)| m.dim()) else {
        return Ok(Polynomial::one(vars));
    };
    if mats.iter().any(|(_, m)| m.dim() != d) {
        return Err(Error::DimensionMismatch(
            "determinant expansion needs equal dimensions".into(),
        ));
    }
    let entry = |i: usize, j: usize| -> Polynomial {
        let mut p = if i == j {
            Polynomial::one(vars.clone())
        } else {
            Polynomial::zero(vars.clone())
        };
        for (name, m) in mats {
            let c = m.entry(i, j);
            if !c.is_zero() {
                let v = Polynomial::variable(vars.clone(), name).expect("declared variable");
                p = p.add(&v.scale(c));
            }
        }
        p
    };
    Ok(det_poly_matrix(d, vars.clone(), &entry))
}

/// Laplace expansion with memoization over column subsets; the callback
/// provides entry `(i, j)` of a `d x d` matrix of polynomials over `vars`.
pub(crate) fn det_poly_matrix<F: Fn(usize, usize) -> Polynomial>(
    d: usize,
    vars: VariableSet,
    entry: &F,
) -> Polynomial {
    use std::collections::HashMap;
    fn minor<F: Fn(usize, usize) -> Polynomial>(
        cols: u32,
        entry: &F,
        memo: &mut HashMap<u32, Polynomial>,
        vars: &VariableSet,
    ) -> Polynomial {
        if cols == 0 {
            return Polynomial::one(vars.clone());
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let row = cols.count_ones() as usize - 1;
        let mut acc = Polynomial::zero(vars.clone());
        // Laplace sign along row `row`, leftmost active column first.
        let mut sign = row % 2 == 0;
        let mut rest = cols;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let e = entry(row, j);
            if !e.is_zero() {
                let sub = minor(cols & !(1 << j), entry, memo, vars);
                let contribution = e.mul(&sub);
                acc = if sign {
                    acc.add(&contribution)
                } else {
                    acc.sub(&contribution)
                };
            }
            sign = !sign;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    if d == 0 {
        return Polynomial::one(vars);
    }
    let mut memo = HashMap::new();
    minor((1u32 << d) - 1, entry, &mut memo, &vars)
}

/// Serde form for matrices: row-major arrays of rational strings.
#[derive(Serialize, Deserialize)]
#[serde(transparent)]
pub struct MatrixJson(pub Vec<Vec<String>>);

impl MatrixJson {
    pub fn to_mat(&self) -> Result<MatQ> {
        MatQ::from_rows(
            self.0
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|s| parse_rational(s))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn to_symmetric(&self) -> Result<SymmetricMatrixQ> {
        SymmetricMatrixQ::new(self.to_mat()?)
    }

    pub fn from_mat(m: &MatQ) -> Self {
        MatrixJson(
            (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| m[(i, j)].to_string()).collect())
                .collect(),
        )
    }
}
