//! Finite-dimensional quotient rings and the unit-stripping step that turns
//! a local augmentation ideal into a structure-constant algebra.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

use super::buchberger::GroebnerBasis;
use super::monomial::{Monomial, VarList};
use super::poly::Polynomial;

/// The standard monomials of a zero-dimensional ideal: the monomials not
/// divisible by any leading monomial, which form a basis of the quotient.
/// Sorted by total degree, then by descending lex order, so the unit comes
/// first. Errors if some variable has no pure power among the leading
/// monomials (the quotient would be infinite-dimensional).
pub fn standard_monomials(vars: &Arc<VarList>, gb: &GroebnerBasis) -> Result<Vec<Monomial>> {
    let n = vars.len();
    let lms: Vec<&Monomial> = gb
        .polys()
        .iter()
        .map(|g| g.leading_monomial().expect("basis elements are nonzero"))
        .collect();
    if lms.iter().any(|m| m.is_unit()) {
        // The ideal is the whole ring; the quotient is zero.
        return Ok(Vec::new());
    }
    // Pure-power bound per variable.
    let mut bound = vec![0u32; n];
    for (v, b) in bound.iter_mut().enumerate() {
        let pure = lms
            .iter()
            .filter(|m| (0..n).all(|w| w == v || m.exponent(w) == 0))
            .map(|m| m.exponent(v))
            .min();
        match pure {
            Some(e) => *b = e,
            None => return Err(Error::InfiniteQuotient(vars.name(v).to_string())),
        }
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    loop {
        let m = Monomial::from_exponents(exps.clone());
        if !lms.iter().any(|lm| lm.divides(&m)) {
            out.push(m);
        }
        // Odometer over the box [0, bound_v).
        let mut v = 0;
        loop {
            if v == n {
                out.sort_by(|a, b| {
                    a.total_degree()
                        .cmp(&b.total_degree())
                        .then_with(|| b.cmp(a))
                });
                return Ok(out);
            }
            exps[v] += 1;
            if exps[v] < bound[v] {
                break;
            }
            exps[v] = 0;
            v += 1;
        }
    }
}

/// A finite-dimensional quotient ring with its multiplication table over the
/// standard monomial basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientAlgebra {
    vars: Arc<VarList>,
    basis: Vec<Monomial>,
    /// table[(i * dim + j) * dim + k] = coefficient of basis[k] in
    /// basis[i] * basis[j].
    table: Vec<BigRational>,
}

impl QuotientAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vars(&self) -> &Arc<VarList> {
        &self.vars
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> &BigRational {
        &self.table[(i * self.dim() + j) * self.dim() + k]
    }

    /// Coefficients of basis[i] * basis[j] over the standard monomials.
    pub fn product_row(&self, i: usize, j: usize) -> &[BigRational] {
        let d = self.dim();
        &self.table[(i * d + j) * d..(i * d + j + 1) * d]
    }

    /// The table is symmetric by construction; spot-checkable.
    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| self.product_row(i, j) == self.product_row(j, i)))
    }

    /// Associativity check over all basis triples (the ring is associative
    /// by construction; this verifies the table).
    pub fn is_associative(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let mut left = vec![BigRational::zero(); d];
                    let mut right = vec![BigRational::zero(); d];
                    for (l, c) in self.product_row(i, j).iter().enumerate() {
                        if !c.is_zero() {
                            for (t, e) in self.product_row(l, k).iter().enumerate() {
                                left[t] = &left[t] + c * e;
                            }
                        }
                    }
                    for (l, c) in self.product_row(j, k).iter().enumerate() {
                        if !c.is_zero() {
                            for (t, e) in self.product_row(i, l).iter().enumerate() {
                                right[t] = &right[t] + c * e;
                            }
                        }
                    }
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Multiplication table of the quotient: products of standard monomials,
/// reduced by the basis, expanded over standard monomials.
pub fn quotient_algebra(vars: &Arc<VarList>, gb: &GroebnerBasis) -> Result<QuotientAlgebra> {
    let basis = standard_monomials(vars, gb)?;
    let dim = basis.len();
    let index: BTreeMap<&Monomial, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut table = vec![BigRational::zero(); dim * dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let prod = Polynomial::monomial(
                vars.clone(),
                basis[i].mul(&basis[j]),
                BigRational::one(),
            );
            let nf = gb.reduce(&prod);
            for (m, c) in nf.terms() {
                let k = *index
                    .get(m)
                    .expect("normal form is supported on standard monomials");
                table[(i * dim + j) * dim + k] = c.clone();
            }
        }
    }
    Ok(QuotientAlgebra {
        vars: vars.clone(),
        basis,
        table,
    })
}

/// Forget the unit: the algebra on the positive-degree standard monomials.
/// Requires that no product of positive-degree monomials has a coefficient
/// on the unit monomial (true for augmentation ideals of local algebras
/// with nilpotent maximal ideal).
pub fn maximal_ideal_algebra(q: &QuotientAlgebra) -> Result<Algebra> {
    let Some(unit_pos) = q.basis.iter().position(Monomial::is_unit) else {
        return Err(Error::NotAugmentationIdeal);
    };
    let keep: Vec<usize> = (0..q.dim()).filter(|&i| i != unit_pos).collect();
    let m = keep.len();
    let field = Field::rationals();
    let mut alg = Algebra::zero(field, m);
    for (a, &i) in keep.iter().enumerate() {
        for (b, &j) in keep.iter().enumerate() {
            let row = q.product_row(i, j);
            if !row[unit_pos].is_zero() {
                return Err(Error::NotAugmentationIdeal);
            }
            for (c, &k) in keep.iter().enumerate() {
                if !row[k].is_zero() {
                    alg.set_tensor_entry(a, b, c, Scalar::Rat(row[k].clone()));
                }
            }
        }
    }
    alg.set_labels(keep.iter().map(|&i| q.basis[i].display(&q.vars)).collect());
    Ok(alg)
}
