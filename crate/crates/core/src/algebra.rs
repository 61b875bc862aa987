//! Finite-dimensional algebras given by structure constants.
//!
//! An algebra of dimension n over a field K is the tensor c with
//! e_i * e_j = sum_k c[i][j][k] e_k. Commutativity is not assumed by the
//! type; it is a reported property, so non-commutative input (and
//! counterexamples like Suttles' algebra) can be represented and analyzed.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::subspace::Subspace;

#[derive(Debug, Clone, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    tensor: Vec<Scalar>, // index (i*dim + j)*dim + k
    labels: Vec<String>,
}

/// Equality is tensor equality over the same field; labels are cosmetic.
impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.tensor == other.tensor
    }
}

/// Whether a product table lists both orientations or should be mirrored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetrize {
    Yes,
    No,
}

impl Algebra {
    /// The zero algebra of the given dimension (all products vanish).
    /// Dimension 0 is permitted; it is the identity of [`Algebra::direct_sum`].
    pub fn zero(field: Field, dim: usize) -> Algebra {
        Algebra {
            field,
            dim,
            tensor: vec![field.zero(); dim * dim * dim],
            labels: default_labels(dim),
        }
    }

    /// Build from a flat structure tensor, indexed (i*dim + j)*dim + k.
    pub fn from_tensor(field: Field, dim: usize, tensor: Vec<Scalar>) -> Result<Algebra> {
        if tensor.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                got: tensor.len(),
            });
        }
        if let Some(bad) = tensor.iter().find(|s| !field.contains(s)) {
            let _ = bad;
            return Err(Error::FieldMismatch);
        }
        Ok(Algebra {
            field,
            dim,
            tensor,
            labels: default_labels(dim),
        })
    }

    /// Build from a sparse product table. Each entry ((i, j), rhs) declares
    /// e_i * e_j = sum of rhs; indices are 0-based. With [`Symmetrize::Yes`]
    /// the mirrored product is filled in as well; conflicting declarations
    /// (same pair declared twice with different values) are rejected.
    pub fn from_products(
        field: Field,
        dim: usize,
        products: &[((usize, usize), Vec<(usize, Scalar)>)],
        symmetrize: Symmetrize,
    ) -> Result<Algebra> {
        let mut alg = Algebra::zero(field, dim);
        let mut declared = vec![false; dim * dim];
        let declare = |alg: &mut Algebra,
                           decl: &mut Vec<bool>,
                           i: usize,
                           j: usize,
                           rhs: &[(usize, Scalar)]|
         -> Result<()> {
            if i >= dim || j >= dim {
                return Err(Error::Invalid(format!(
                    "basis index out of range: e{}*e{} in dimension {}",
                    i + 1,
                    j + 1,
                    dim
                )));
            }
            let mut col = vec![field.zero(); dim];
            for (k, c) in rhs {
                if *k >= dim {
                    return Err(Error::Invalid(format!(
                        "basis index out of range: e{} in dimension {}",
                        k + 1,
                        dim
                    )));
                }
                if !field.contains(c) {
                    return Err(Error::FieldMismatch);
                }
                col[*k] = field.add(&col[*k], c);
            }
            if decl[i * dim + j] {
                let existing: Vec<Scalar> =
                    (0..dim).map(|k| alg.tensor_entry(i, j, k).clone()).collect();
                if existing != col {
                    return Err(Error::ConflictingProduct { i: i + 1, j: j + 1 });
                }
                return Ok(());
            }
            decl[i * dim + j] = true;
            for (k, v) in col.into_iter().enumerate() {
                alg.set_tensor_entry(i, j, k, v);
            }
            Ok(())
        };
        for ((i, j), rhs) in products {
            declare(&mut alg, &mut declared, *i, *j, rhs)?;
            if symmetrize == Symmetrize::Yes && i != j {
                declare(&mut alg, &mut declared, *j, *i, rhs)?;
            }
        }
        Ok(alg)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.dim, "one label per basis vector");
        self.labels = labels;
    }

    pub fn tensor_entry(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.tensor[(i * self.dim + j) * self.dim + k]
    }

    pub(crate) fn set_tensor_entry(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        debug_assert!(self.field.contains(&v));
        self.tensor[(i * self.dim + j) * self.dim + k] = v;
    }

    pub fn is_zero_tensor(&self) -> bool {
        self.tensor.iter().all(Scalar::is_zero)
    }

    /// The coordinates of e_i * e_j.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|k| self.tensor_entry(i, j, k).clone()).collect()
    }

    /// Bilinear product of two coordinate vectors.
    pub fn product(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        if u.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: u.len(),
            });
        }
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let uv = f.mul(ui, vj);
                for k in 0..self.dim {
                    let c = self.tensor_entry(i, j, k);
                    if !c.is_zero() {
                        out[k] = f.add(&out[k], &f.mul(&uv, c));
                    }
                }
            }
        }
        Ok(out)
    }

    /// The i-th standard basis vector as a coordinate vector.
    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// First pair (i, j) with e_i * e_j != e_j * e_i, if any.
    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in 0..self.dim {
                    if self.tensor_entry(i, j, k) != self.tensor_entry(j, i, k) {
                        return Some((i, j));
                    }
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    /// First triple (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k), if any.
    pub fn associator_witness(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.dim {
            let ei = self.basis_vector(i);
            for j in 0..self.dim {
                let eij = self.basis_product(i, j);
                for k in 0..self.dim {
                    let ek = self.basis_vector(k);
                    let left = self.product(&eij, &ek).expect("dims agree");
                    let ejk = self.basis_product(j, k);
                    let right = self.product(&ei, &ejk).expect("dims agree");
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associator_witness().is_none()
    }

    /// Block-diagonal sum; cross products vanish, labels are concatenated.
    pub fn direct_sum(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let n = self.dim;
        let m = other.dim;
        let mut out = Algebra::zero(self.field, n + m);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out.set_tensor_entry(i, j, k, self.tensor_entry(i, j, k).clone());
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    out.set_tensor_entry(n + i, n + j, n + k, other.tensor_entry(i, j, k).clone());
                }
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        out.labels = labels;
        Ok(out)
    }

    /// The annihilator {z : z*e_i = 0 and e_i*z = 0 for all i}, as the kernel
    /// of the stacked left/right multiplication constraints.
    pub fn annihilator(&self) -> Subspace {
        let n = self.dim;
        if n == 0 {
            return Subspace::zero(self.field, 0);
        }
        // Unknown z_j; rows indexed by (side, i, k).
        let mut rows = Vec::with_capacity(2 * n * n);
        for i in 0..n {
            for k in 0..n {
                // z * e_i = 0: sum_j z_j c[j][i][k]
                rows.push((0..n).map(|j| self.tensor_entry(j, i, k).clone()).collect());
                // e_i * z = 0: sum_j z_j c[i][j][k]
                rows.push((0..n).map(|j| self.tensor_entry(i, j, k).clone()).collect());
            }
        }
        let m = Matrix::from_rows(self.field, rows).expect("well-formed constraint matrix");
        m.kernel()
    }

    /// Reinterpret a rational algebra mod p. Every structure constant must
    /// have a denominator invertible mod p.
    pub fn reduce_mod(&self, p: u64) -> Result<Algebra> {
        let fp = Field::prime(p)?;
        match self.field {
            Field::Prime(q) if q == p => return Ok(self.clone()),
            Field::Prime(_) => return Err(Error::FieldMismatch),
            Field::Rationals => {}
        }
        let mut out = Algebra::zero(fp, self.dim);
        out.labels = self.labels.clone();
        for (idx, s) in self.tensor.iter().enumerate() {
            let r = s.as_rational().expect("rational algebra");
            out.tensor[idx] = fp.from_rational(r)?;
        }
        Ok(out)
    }

    /// Require every structure constant to be an integer (used by the
    /// finite-field brute-force oracle).
    pub fn integer_tensor(&self) -> Result<Vec<i64>> {
        self.tensor
            .iter()
            .map(|s| match s {
                Scalar::Mod(r) => Ok(*r as i64),
                Scalar::Rat(_) => s
                    .as_integer()
                    .ok_or_else(|| Error::NonIntegerEntry(s.to_string())),
            })
            .collect()
    }
}

pub(crate) fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    /// e1*e1 = e2 in dimension 2.
    fn a12() -> Algebra {
        Algebra::from_products(q(), 2, &[((0, 0), vec![(1, q().one())])], Symmetrize::Yes).unwrap()
    }

    #[test]
    fn product_on_zero_algebra() {
        let a = Algebra::zero(q(), 1);
        let e1 = a.basis_vector(0);
        assert!(a.product(&e1, &e1).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn product_of_basis_vectors_reads_tensor() {
        let a = a12();
        let e1 = a.basis_vector(0);
        assert_eq!(a.product(&e1, &e1).unwrap(), a.basis_vector(1));
    }

    #[test]
    fn bilinearity() {
        let a = a12();
        let f = q();
        let u = vec![f.integer(2), f.integer(-1)];
        let v = vec![f.integer(3), f.integer(5)];
        let two_u: Vec<Scalar> = u.iter().map(|s| f.mul(&f.integer(2), s)).collect();
        let lhs = a.product(&two_u, &v).unwrap();
        let rhs: Vec<Scalar> = a
            .product(&u, &v)
            .unwrap()
            .iter()
            .map(|s| f.mul(&f.integer(2), s))
            .collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutativity_witness_found() {
        // e1*e2 = e3, e2*e1 = 0: not commutative, witness (0, 1).
        let a = Algebra::from_products(q(), 3, &[((0, 1), vec![(2, q().one())])], Symmetrize::No)
            .unwrap();
        assert_eq!(a.commutativity_witness(), Some((0, 1)));
        assert!(a12().is_commutative());
    }

    #[test]
    fn conflicting_declaration_rejected() {
        let bad = Algebra::from_products(
            q(),
            2,
            &[
                ((0, 1), vec![(0, q().one())]),
                ((1, 0), vec![(1, q().one())]),
            ],
            Symmetrize::Yes,
        );
        assert!(matches!(bad, Err(Error::ConflictingProduct { .. })));
        // Equal mirrored declarations are fine.
        let ok = Algebra::from_products(
            q(),
            2,
            &[
                ((0, 1), vec![(0, q().one())]),
                ((1, 0), vec![(0, q().one())]),
            ],
            Symmetrize::Yes,
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn direct_sum_blocks() {
        let a = a12();
        let b = Algebra::zero(q(), 1);
        let s = a.direct_sum(&b).unwrap();
        assert_eq!(s.dim(), 3);
        let e1 = s.basis_vector(0);
        assert_eq!(s.product(&e1, &e1).unwrap(), s.basis_vector(1));
        let e3 = s.basis_vector(2);
        assert!(s.product(&e1, &e3).unwrap().iter().all(Scalar::is_zero));
        // Sum with the 0-dimensional algebra is the identity.
        let z = Algebra::zero(q(), 0);
        assert_eq!(a.direct_sum(&z).unwrap(), a);
    }

    #[test]
    fn annihilator_of_zero_algebra_is_full() {
        let a = Algebra::zero(q(), 3);
        assert_eq!(a.annihilator().dim(), 3);
    }

    #[test]
    fn annihilators_by_inspection() {
        // e1e1 = e2, e1e3 = e4: annihilator is span{e2, e4}.
        let a14 = Algebra::from_products(
            q(),
            4,
            &[((0, 0), vec![(1, q().one())]), ((0, 2), vec![(3, q().one())])],
            Symmetrize::Yes,
        )
        .unwrap();
        let ann = a14.annihilator();
        assert_eq!(ann.dim(), 2);
        assert!(ann.contains(&a14.basis_vector(1)).unwrap());
        assert!(ann.contains(&a14.basis_vector(3)).unwrap());
        // e1e1 = e2, e3e4 = e2: annihilator is span{e2}.
        let a24 = Algebra::from_products(
            q(),
            4,
            &[((0, 0), vec![(1, q().one())]), ((2, 3), vec![(1, q().one())])],
            Symmetrize::Yes,
        )
        .unwrap();
        let ann = a24.annihilator();
        assert_eq!(ann.dim(), 1);
        assert!(ann.contains(&a24.basis_vector(1)).unwrap());
    }

    #[test]
    fn field_mismatch_in_direct_sum() {
        let a = a12();
        let b = Algebra::zero(Field::prime(5).unwrap(), 1);
        assert!(matches!(a.direct_sum(&b), Err(Error::FieldMismatch)));
    }
}
