//! Linear subspaces of coordinate space in canonical form.
//!
//! A subspace is stored as a row-reduced basis matrix with zero rows removed,
//! so two subspaces are equal iff their representations are entry-wise equal.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Matrix, // RREF, no zero rows, pivots strictly increasing
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Matrix::identity(field, ambient),
        }
    }

    /// Canonical span of a list of vectors.
    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Subspace> {
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: v.len(),
                });
            }
        }
        let m = Matrix::from_rows(field, vectors.to_vec())?;
        Ok(Subspace::from_rows_of(&m, ambient))
    }

    /// Canonical span of the rows of a matrix.
    pub fn from_matrix(m: &Matrix) -> Subspace {
        Subspace::from_rows_of(m, m.cols())
    }

    fn from_rows_of(m: &Matrix, ambient: usize) -> Subspace {
        let (r, rank) = m.rref();
        let basis = Matrix::from_fn(m.field(), rank, ambient, |i, j| r.get(i, j).clone());
        Subspace {
            field: m.field(),
            ambient,
            basis,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// The canonical RREF basis matrix (dim x ambient).
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    /// Membership test by reduction against the RREF basis.
    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        let f = self.field;
        let mut rem: Vec<Scalar> = v.to_vec();
        for i in 0..self.dim() {
            let Some(pivot) = (0..self.ambient).find(|&j| !self.basis.get(i, j).is_zero()) else {
                continue;
            };
            if rem[pivot].is_zero() {
                continue;
            }
            let c = f.neg(&rem[pivot]);
            for j in 0..self.ambient {
                rem[j] = f.add_mul(&rem[j], &c, self.basis.get(i, j));
            }
        }
        Ok(rem.iter().all(Scalar::is_zero))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(Subspace::from_rows_of(&stacked, self.ambient))
    }

    /// True iff `other` is contained in `self`.
    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        for row in other.basis_rows() {
            if !self.contains(&row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
