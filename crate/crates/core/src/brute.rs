//! Exhaustive isomorphism search over a prime field.
//!
//! Enumerates every invertible matrix over F_p (dimension at most 3) and
//! tests the homomorphism condition on basis pairs. A witness is a genuine
//! isomorphism over F_p; a negative answer is exhaustive over F_p. Either
//! way this is an oracle heuristic for characteristic-0 questions: algebras
//! non-isomorphic mod p can still be isomorphic over Q-bar, and vice versa.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::morphism::LinearMap;

const DIM_LIMIT: usize = 3;

/// Search GL(n, p) for an isomorphism a -> b. Returns the first witness in
/// a fixed enumeration order, or None after exhausting the group.
///
/// Inputs must have equal dimension <= 3 and either live over F_p already
/// or have integer structure constants to reduce.
pub fn brute_force_isomorphic(a: &Algebra, b: &Algebra, p: u64) -> Result<Option<LinearMap>> {
    let fp = Field::prime(p)?;
    let n = a.dim();
    if b.dim() != n {
        return Err(Error::Shape(format!(
            "dimensions differ: {} vs {}",
            n,
            b.dim()
        )));
    }
    if n > DIM_LIMIT {
        return Err(Error::BruteForceDim {
            limit: DIM_LIMIT,
            got: n,
        });
    }
    let ta = tensor_mod_p(a, p)?;
    let tb = tensor_mod_p(b, p)?;
    if n == 0 {
        return Ok(Some(LinearMap::new(Matrix::zeros(fp, 0, 0))));
    }

    let total = (n * n) as u32;
    let mut m = vec![0u64; n * n]; // row-major, column c = image of e_c
    loop {
        if det_mod_p(&m, n, p) != 0 && is_hom_mod_p(&m, &ta, &tb, n, p) {
            let matrix = Matrix::from_fn(fp, n, n, |r, c| Scalar::Mod(m[r * n + c]));
            return Ok(Some(LinearMap::new(matrix)));
        }
        // Odometer over n^2 base-p digits.
        let mut pos = 0;
        loop {
            if pos == total {
                return Ok(None);
            }
            m[pos as usize] += 1;
            if m[pos as usize] < p {
                break;
            }
            m[pos as usize] = 0;
            pos += 1;
        }
    }
}

fn tensor_mod_p(a: &Algebra, p: u64) -> Result<Vec<u64>> {
    let n = a.dim();
    match a.field() {
        Field::Prime(q) if q != p => Err(Error::FieldMismatch),
        Field::Prime(_) => {
            let mut out = Vec::with_capacity(n * n * n);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        match a.tensor_entry(i, j, k) {
                            Scalar::Mod(r) => out.push(*r),
                            Scalar::Rat(_) => unreachable!("prime-field algebra"),
                        }
                    }
                }
            }
            Ok(out)
        }
        Field::Rationals => Ok(a
            .integer_tensor()?
            .into_iter()
            .map(|v| v.rem_euclid(p as i64) as u64)
            .collect()),
    }
}

fn det_mod_p(m: &[u64], n: usize, p: u64) -> u64 {
    match n {
        1 => m[0] % p,
        2 => (m[0] * m[3] % p + p - m[1] * m[2] % p) % p,
        3 => {
            let a = |r: usize, c: usize| m[r * 3 + c];
            let plus = a(0, 0) * ((a(1, 1) * a(2, 2)) % p) % p
                + a(0, 1) * ((a(1, 2) * a(2, 0)) % p) % p
                + a(0, 2) * ((a(1, 0) * a(2, 1)) % p) % p;
            let minus = a(0, 0) * ((a(1, 2) * a(2, 1)) % p) % p
                + a(0, 1) * ((a(1, 0) * a(2, 2)) % p) % p
                + a(0, 2) * ((a(1, 1) * a(2, 0)) % p) % p;
            (plus % p + p - minus % p) % p
        }
        _ => unreachable!("dimension bounded by {DIM_LIMIT}"),
    }
}

/// f(e_i) *_b f(e_j) == f(e_i *_a e_j) for all basis pairs.
fn is_hom_mod_p(m: &[u64], ta: &[u64], tb: &[u64], n: usize, p: u64) -> bool {
    let t = |t: &[u64], i: usize, j: usize, k: usize| t[(i * n + j) * n + k];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // sum_{r,s} m[r][i] m[s][j] tb[r][s][k]
                let mut lhs = 0u64;
                for r in 0..n {
                    let mri = m[r * n + i];
                    if mri == 0 {
                        continue;
                    }
                    for s in 0..n {
                        let msj = m[s * n + j];
                        let c = t(tb, r, s, k);
                        if msj != 0 && c != 0 {
                            lhs = (lhs + mri * msj % p * c) % p;
                        }
                    }
                }
                // sum_l ta[i][j][l] m[k][l]
                let mut rhs = 0u64;
                for l in 0..n {
                    let c = t(ta, i, j, l);
                    if c != 0 {
                        rhs = (rhs + c * m[k * n + l]) % p;
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}
