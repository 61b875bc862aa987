//! Dense matrices over an exact field, with reduced row echelon form as the
//! workhorse for rank, kernels, solving and inversion.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Build from row vectors; all rows must share one length and all entries
    /// must belong to `field`.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::Shape(format!(
                    "ragged rows: {} vs {}",
                    r.len(),
                    ncols
                )));
            }
            for s in r {
                if !field.contains(s) {
                    return Err(Error::FieldMismatch);
                }
                data.push(s.clone());
            }
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert!(self.field.contains(&v), "scalar not in matrix field");
        self.data[r * self.cols + c] = v;
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        (0..self.cols).map(|c| self.get(r, c).clone()).collect()
    }

    pub fn col_vec(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::Shape(format!(
                "vstack: {} vs {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Put `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.rows != other.rows {
            return Err(Error::Shape(format!(
                "hstack: {} vs {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out[i] = f.add(&out[i], &f.mul(a, vj));
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "mul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = f.add(out.get(i, j), &f.mul(a, b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form together with the rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pivot_row);
            let inv = f.inv(m.get(pivot_row, col)).expect("nonzero pivot");
            for j in col..m.cols {
                let v = f.mul(m.get(pivot_row, j), &inv);
                m.set(pivot_row, j, v);
            }
            for r in 0..m.rows {
                if r == pivot_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = f.neg(m.get(r, col));
                for j in col..m.cols {
                    let v = f.add_mul(m.get(r, j), &factor, m.get(pivot_row, j));
                    m.set(r, j, v);
                }
            }
            pivot_row += 1;
        }
        (m, pivot_row)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Kernel {v : M v = 0} as a canonical subspace of the column space.
    pub fn kernel(&self) -> Subspace {
        let (r, rank) = self.rref();
        let mut pivot_cols = Vec::with_capacity(rank);
        let mut row = 0;
        for col in 0..r.cols {
            if row < r.rows && !r.get(row, col).is_zero() {
                pivot_cols.push(col);
                row += 1;
            }
        }
        let f = self.field;
        let mut basis = Vec::new();
        for free in 0..r.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![f.zero(); r.cols];
            v[free] = f.one();
            for (prow, &pcol) in pivot_cols.iter().enumerate() {
                v[pcol] = f.neg(r.get(prow, free));
            }
            basis.push(v);
        }
        Subspace::span(f, self.cols, &basis).expect("kernel vectors well-formed")
    }

    /// One solution of M x = rhs, or None if the system is inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: rhs.len(),
            });
        }
        let f = self.field;
        let rhs_col = Matrix::from_rows(f, rhs.iter().map(|s| vec![s.clone()]).collect())?;
        let aug = self.hstack(&rhs_col)?;
        let (r, _) = aug.rref();
        // Inconsistent iff some row is (0 ... 0 | nonzero).
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        for i in 0..r.rows {
            let Some(lead) = (0..r.cols).find(|&j| !r.get(i, j).is_zero()) else {
                continue;
            };
            if lead == self.cols {
                return Ok(None);
            }
            pivots.push((i, lead));
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, lead) in pivots {
            x[lead] = r.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Determinant by fraction-free-enough Gaussian elimination over the field.
    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "det of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let f = self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for col in 0..n {
            let Some(r) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(f.zero());
            };
            if r != col {
                m.swap_rows(r, col);
                det = f.neg(&det);
            }
            let pivot = m.get(col, col).clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot).expect("nonzero pivot");
            for r in col + 1..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = f.neg(&f.mul(m.get(r, col), &inv));
                for j in col..n {
                    let v = f.add_mul(m.get(r, j), &factor, m.get(col, j));
                    m.set(r, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Inverse matrix, or None if singular.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "inverse of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n))?;
        let (r, _) = aug.rref();
        // Invertible iff the left block reduced to the identity.
        let id = Matrix::identity(self.field, n);
        for i in 0..n {
            for j in 0..n {
                if r.get(i, j) != id.get(i, j) {
                    return Ok(None);
                }
            }
        }
        Ok(Some(Matrix::from_fn(self.field, n, n, |i, j| {
            r.get(i, n + j).clone()
        })))
    }

    /// Random invertible matrix with small integer entries; used to make
    /// isomorphic test pairs by base change.
    pub fn random_invertible(field: Field, n: usize, rng: &mut impl Rng) -> Matrix {
        if n == 0 {
            return Matrix::zeros(field, 0, 0);
        }
        loop {
            let m = Matrix::from_fn(field, n, n, |_, _| field.integer(rng.gen_range(-3..=3)));
            if !m.det().expect("square").is_zero() {
                return m;
            }
        }
    }

    /// Random product of elementary row operations: determinant ±1, so the
    /// inverse stays integral and conjugated tensors keep small entries.
    pub fn random_unimodular(field: Field, n: usize, rng: &mut impl Rng) -> Matrix {
        let mut m = Matrix::identity(field, n);
        if n < 2 {
            return m;
        }
        for _ in 0..3 * n {
            let i = rng.gen_range(0..n);
            let j = (i + rng.gen_range(1..n)) % n;
            let c = field.integer(rng.gen_range(-2..=2i64));
            for col in 0..n {
                let v = m.field.add_mul(m.get(j, col), &c, m.get(i, col));
                m.set(j, col, v);
            }
            if rng.gen_bool(0.3) {
                m.swap_rows(i, j);
            }
        }
        m
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}
