//! Linear maps between algebras, homomorphism and isomorphism verification,
//! base change, and the derivation algebra.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Matrix;

/// A linear map with the fixed convention that column j holds the image of
/// the j-th domain basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> LinearMap {
        LinearMap { matrix }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Image of the j-th domain basis vector.
    pub fn image_of_basis(&self, j: usize) -> Vec<Scalar> {
        self.matrix.col_vec(j)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.matrix.mul_vec(v)
    }
}

/// Check f(e_i * e_j) = f(e_i) * f(e_j) on all basis pairs, which suffices
/// by bilinearity. Returns the first violating pair.
pub fn homomorphism_witness(
    f: &LinearMap,
    a: &Algebra,
    b: &Algebra,
) -> Result<Option<(usize, usize)>> {
    if a.field() != b.field() || a.field() != f.matrix.field() {
        return Err(Error::FieldMismatch);
    }
    if f.domain_dim() != a.dim() {
        return Err(Error::Shape(format!(
            "map has {} columns, domain has dimension {}",
            f.domain_dim(),
            a.dim()
        )));
    }
    if f.codomain_dim() != b.dim() {
        return Err(Error::Shape(format!(
            "map has {} rows, codomain has dimension {}",
            f.codomain_dim(),
            b.dim()
        )));
    }
    for i in 0..a.dim() {
        let fi = f.image_of_basis(i);
        for j in 0..a.dim() {
            let fj = f.image_of_basis(j);
            let lhs = f.apply(&a.basis_product(i, j))?;
            let rhs = b.product(&fi, &fj)?;
            if lhs != rhs {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

pub fn is_homomorphism(f: &LinearMap, a: &Algebra, b: &Algebra) -> Result<bool> {
    Ok(homomorphism_witness(f, a, b)?.is_none())
}

/// Outcome of an isomorphism check: homomorphism property plus
/// invertibility, with the determinant reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoCheck {
    pub homomorphism: bool,
    pub witness: Option<(usize, usize)>,
    pub determinant: Scalar,
    pub invertible: bool,
}

impl IsoCheck {
    pub fn is_isomorphism(&self) -> bool {
        self.homomorphism && self.invertible
    }
}

pub fn check_isomorphism(f: &LinearMap, a: &Algebra, b: &Algebra) -> Result<IsoCheck> {
    if a.dim() != b.dim() {
        return Err(Error::Shape(format!(
            "isomorphism requires equal dimensions, got {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    let witness = homomorphism_witness(f, a, b)?;
    let determinant = f.matrix.det()?;
    Ok(IsoCheck {
        homomorphism: witness.is_none(),
        witness,
        invertible: !determinant.is_zero(),
        determinant,
    })
}

/// Base change: the algebra with product x o y = p^{-1}(p(x) * p(y)).
/// The result is isomorphic to `a` via `p` by construction.
pub fn conjugate(a: &Algebra, p: &LinearMap) -> Result<Algebra> {
    let n = a.dim();
    if p.matrix.rows() != n || p.matrix.cols() != n {
        return Err(Error::Shape(format!(
            "conjugation needs a square {n}x{n} matrix"
        )));
    }
    if p.matrix.field() != a.field() {
        return Err(Error::FieldMismatch);
    }
    let inv = p.matrix.inverse()?.ok_or(Error::Singular)?;
    let mut out = Algebra::zero(a.field(), n);
    for i in 0..n {
        let pi = p.image_of_basis(i);
        for j in 0..n {
            let pj = p.image_of_basis(j);
            let prod = a.product(&pi, &pj)?;
            let back = inv.mul_vec(&prod)?;
            for (k, v) in back.into_iter().enumerate() {
                out.set_tensor_entry(i, j, k, v);
            }
        }
    }
    Ok(out)
}

/// The space of derivations: linear maps D with D(xy) = D(x)y + xD(y).
/// Returns its dimension and a basis of matrices, obtained as the kernel of
/// the linear system imposed on all basis pairs. The dimension is an
/// isomorphism invariant, stable under base-field extension.
pub fn derivation_space(a: &Algebra) -> (usize, Vec<Matrix>) {
    let n = a.dim();
    let f = a.field();
    if n == 0 {
        return (0, Vec::new());
    }
    // Unknowns D[r][c] (entry in row r, column c; column c = image of e_c),
    // flattened as c * n + r. One equation per (i, j, k); for commutative
    // algebras the (j, i) equation repeats the (i, j) one and is dropped.
    let commutative = a.is_commutative();
    let var = |r: usize, c: usize| c * n + r;
    let mut rows = Vec::with_capacity(n * n * n);
    for i in 0..n {
        let j_start = if commutative { i } else { 0 };
        for j in j_start..n {
            for k in 0..n {
                let mut row = vec![f.zero(); n * n];
                // D(e_i e_j) = sum_l c[i][j][l] D(e_l): coefficient on D[k][l].
                for l in 0..n {
                    let c = a.tensor_entry(i, j, l);
                    if !c.is_zero() {
                        let idx = var(k, l);
                        row[idx] = f.add(&row[idx], c);
                    }
                }
                // -D(e_i) e_j = -sum_l D[l][i] c[l][j][k].
                for l in 0..n {
                    let c = a.tensor_entry(l, j, k);
                    if !c.is_zero() {
                        let idx = var(l, i);
                        row[idx] = f.sub(&row[idx], c);
                    }
                }
                // -e_i D(e_j) = -sum_l D[l][j] c[i][l][k].
                for l in 0..n {
                    let c = a.tensor_entry(i, l, k);
                    if !c.is_zero() {
                        let idx = var(l, j);
                        row[idx] = f.sub(&row[idx], c);
                    }
                }
                if row.iter().any(|s| !s.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        // No constraints at all: every linear map is a derivation.
        return (n * n, (0..n * n)
            .map(|v| Matrix::from_fn(f, n, n, |r, c| if var(r, c) == v { f.one() } else { f.zero() }))
            .collect());
    }
    let system = Matrix::from_rows(f, rows).expect("well-formed derivation system");
    let kernel = system.kernel();
    let basis = kernel
        .basis_rows()
        .into_iter()
        .map(|flat| Matrix::from_fn(f, n, n, |r, c| flat[var(r, c)].clone()))
        .collect();
    (kernel.dim(), basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Symmetrize;
    use crate::field::Field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q() -> Field {
        Field::rationals()
    }

    fn a12() -> Algebra {
        Algebra::from_products(q(), 2, &[((0, 0), vec![(1, q().one())])], Symmetrize::Yes).unwrap()
    }

    fn a13() -> Algebra {
        Algebra::from_products(
            q(),
            3,
            &[((0, 0), vec![(1, q().one())]), ((2, 2), vec![(1, q().one())])],
            Symmetrize::Yes,
        )
        .unwrap()
    }

    #[test]
    fn identity_map_is_isomorphism() {
        let a = a13();
        let id = LinearMap::new(Matrix::identity(q(), 3));
        assert!(is_homomorphism(&id, &a, &a).unwrap());
        let iso = check_isomorphism(&id, &a, &a).unwrap();
        assert!(iso.is_isomorphism());
        assert_eq!(iso.determinant, q().one());
    }

    #[test]
    fn zero_map_is_homomorphism() {
        let a = a13();
        let b = a12();
        let z = LinearMap::new(Matrix::zeros(q(), 2, 3));
        assert!(is_homomorphism(&z, &a, &b).unwrap());
    }

    #[test]
    fn shape_mismatch_rejected() {
        let a = a13();
        let z = LinearMap::new(Matrix::zeros(q(), 2, 2));
        assert!(is_homomorphism(&z, &a, &a12()).is_err());
    }

    #[test]
    fn conjugate_by_identity_is_same() {
        let a = a13();
        let id = LinearMap::new(Matrix::identity(q(), 3));
        assert_eq!(conjugate(&a, &id).unwrap(), a);
    }

    #[test]
    fn conjugate_is_isomorphic_via_p() {
        let a = a13();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let p = LinearMap::new(Matrix::random_invertible(q(), 3, &mut rng));
        let b = conjugate(&a, &p).unwrap();
        // p maps b to a: p(x o y) = p(x) * p(y).
        assert!(is_homomorphism(&p, &b, &a).unwrap());
    }

    #[test]
    fn singular_conjugation_rejected() {
        let a = a12();
        let p = LinearMap::new(Matrix::zeros(q(), 2, 2));
        assert!(matches!(conjugate(&a, &p), Err(Error::Singular)));
    }

    #[test]
    fn derivations_of_zero_algebra() {
        let (dim, basis) = derivation_space(&Algebra::zero(q(), 3));
        assert_eq!(dim, 9);
        assert_eq!(basis.len(), 9);
    }

    #[test]
    fn derivations_of_a12() {
        // D(e1) = a e1 + b e2 forces D(e2) = 2a e2: dimension 2.
        let (dim, basis) = derivation_space(&a12());
        assert_eq!(dim, 2);
        // Every basis element D satisfies D(e1*e1) = 2 e1 D(e1).
        let a = a12();
        for d in basis {
            let de1 = d.col_vec(0);
            let de2 = d.col_vec(1);
            let e1 = a.basis_vector(0);
            let lhs = de2; // D(e2) since e1*e1 = e2
            let prod = a.product(&e1, &de1).unwrap();
            let rhs: Vec<Scalar> = prod.iter().map(|s| q().mul(&q().integer(2), s)).collect();
            assert_eq!(lhs, rhs);
        }
    }
}
