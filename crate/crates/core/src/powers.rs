//! Principal powers, the power chain A^k, derived series, nilpotency,
//! solvability and the nilindex.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::identity::IdentityExpr;
use crate::subspace::Subspace;

/// Default seed for the witness searches; overridable where determinism
/// across runs matters.
pub const DEFAULT_SEED: u64 = 0x5eed_0001;

/// Right-normed principal power x^k (x^1 = x, x^{k+1} = x * x^k).
pub fn principal_power(alg: &Algebra, x: &[Scalar], k: u32) -> Result<Vec<Scalar>> {
    assert!(k >= 1, "principal powers start at x^1");
    let mut acc = x.to_vec();
    if acc.len() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            got: acc.len(),
        });
    }
    for _ in 1..k {
        acc = alg.product(x, &acc)?;
    }
    Ok(acc)
}

/// Span of all products u*v with u in U, v in V.
pub fn subspace_product(alg: &Algebra, u: &Subspace, v: &Subspace) -> Result<Subspace> {
    let n = alg.dim();
    if u.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: u.ambient_dim(),
        });
    }
    if v.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: v.ambient_dim(),
        });
    }
    let mut products = Vec::with_capacity(u.dim() * v.dim());
    for a in u.basis_rows() {
        for b in v.basis_rows() {
            products.push(alg.product(&a, &b)?);
        }
    }
    Subspace::span(alg.field(), n, &products)
}

/// The chain A^1, A^2, ... with A^k = sum over i+j=k of A^i A^j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerChain {
    /// subspaces[k-1] = A^k.
    pub subspaces: Vec<Subspace>,
    /// True when the last two computed subspaces coincide.
    pub stabilized: bool,
    /// First k (1-based) with A^k = 0, if reached within the bound.
    pub vanished_at: Option<u32>,
}

impl PowerChain {
    /// Dimensions dim A^1, dim A^2, ... truncated after the first zero or
    /// the first repeat. Invariant under base change.
    pub fn dims(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for s in &self.subspaces {
            let d = s.dim();
            let repeat = out.last() == Some(&d);
            out.push(d);
            if d == 0 || repeat {
                break;
            }
        }
        out
    }
}

/// Compute the power chain up to k = 2*dim + 2 or until A^k vanishes.
/// If no A^k vanishes within the bound the algebra is reported not
/// nilpotent; for the nilpotent algebras in scope the class is at most
/// dim + 1, so the bound carries ample margin.
pub fn power_chain(alg: &Algebra) -> PowerChain {
    let n = alg.dim();
    let full = Subspace::full(alg.field(), n);
    let mut chain: Vec<Subspace> = vec![full];
    let bound = 2 * n + 2;
    let mut vanished_at = if chain[0].is_zero() { Some(1) } else { None };
    for k in 2..=bound {
        if vanished_at.is_some() {
            break;
        }
        let mut next = Subspace::zero(alg.field(), n);
        for i in 1..k {
            let j = k - i;
            let prod = subspace_product(alg, &chain[i - 1], &chain[j - 1]).expect("ambient dims");
            next = next.sum(&prod).expect("ambient dims");
        }
        if next.is_zero() {
            vanished_at = Some(k as u32);
        }
        chain.push(next);
    }
    let stabilized = chain.len() >= 2 && chain[chain.len() - 1] == chain[chain.len() - 2];
    PowerChain {
        subspaces: chain,
        stabilized,
        vanished_at,
    }
}

/// Nilpotency verdict with the class (the first k with A^k = 0).
pub fn is_nilpotent(alg: &Algebra) -> (bool, Option<u32>) {
    let chain = power_chain(alg);
    (chain.vanished_at.is_some(), chain.vanished_at)
}

/// Whether A^3 = 0 as a subspace.
pub fn cube_zero(alg: &Algebra) -> bool {
    let chain = power_chain(alg);
    chain.vanished_at.is_some_and(|k| k <= 3)
        || chain.subspaces.get(2).is_some_and(Subspace::is_zero)
}

/// Derived series A^(0) = A, A^(k+1) = A^(k) * A^(k), until it vanishes or
/// stabilizes. The series is decreasing, so stabilization at a nonzero term
/// certifies non-solvability.
pub fn derived_series(alg: &Algebra) -> Vec<Subspace> {
    let mut series = vec![Subspace::full(alg.field(), alg.dim())];
    loop {
        let last = series.last().unwrap();
        if last.is_zero() {
            break;
        }
        let next = subspace_product(alg, last, last).expect("ambient dims");
        if &next == last {
            series.push(next);
            break;
        }
        series.push(next);
    }
    series
}

pub fn is_solvable(alg: &Algebra) -> bool {
    derived_series(alg).last().is_none_or(Subspace::is_zero)
}

/// The nilindex: the smallest nu such that x^nu = 0 holds identically,
/// verified by the multilinearized identity check, together with a witness
/// x whose (nu-1)-st power does not vanish.
///
/// Candidates run up to dim + 2; if none holds the input is reported not a
/// nilalgebra up to that bound (e.g. e*e = e has no nilindex at all).
pub fn nilindex(alg: &Algebra) -> Result<(u32, Vec<Scalar>)> {
    nilindex_seeded(alg, DEFAULT_SEED)
}

pub fn nilindex_seeded(alg: &Algebra, seed: u64) -> Result<(u32, Vec<Scalar>)> {
    let nu = nilindex_value(alg)?;
    if nu == 1 {
        // Dimension 0: the empty algebra.
        return Ok((1, Vec::new()));
    }
    let witness = nilindex_witness(alg, nu, seed)?;
    Ok((nu, witness))
}

/// The nilindex value alone (no witness search); what the fingerprint uses.
pub fn nilindex_value(alg: &Algebra) -> Result<u32> {
    let n = alg.dim();
    if n == 0 {
        return Ok(1);
    }
    let bound = n as u32 + 2;
    for nu in 2..=bound {
        if IdentityExpr::power(nu).check(alg)?.holds {
            return Ok(nu);
        }
    }
    Err(Error::NoNilindex { bound })
}

/// Search x with x^{nu-1} != 0: basis vectors first, then 0/1 combinations,
/// then seeded random small-integer vectors. Over an infinite field a
/// generic element attains the nilindex, so the random stage terminates in
/// practice; 1000 draws bounds it.
fn nilindex_witness(alg: &Algebra, nu: u32, seed: u64) -> Result<Vec<Scalar>> {
    let n = alg.dim();
    let f = alg.field();
    let nonzero = |v: &[Scalar]| v.iter().any(|s| !s.is_zero());

    for i in 0..n {
        let x = alg.basis_vector(i);
        if nonzero(&principal_power(alg, &x, nu - 1)?) {
            return Ok(x);
        }
    }
    for mask in 1u64..(1 << n) {
        let x: Vec<Scalar> = (0..n)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    f.one()
                } else {
                    f.zero()
                }
            })
            .collect();
        if nonzero(&principal_power(alg, &x, nu - 1)?) {
            return Ok(x);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let x: Vec<Scalar> = (0..n).map(|_| f.integer(rng.gen_range(-5..=5))).collect();
        if nonzero(&x) && nonzero(&principal_power(alg, &x, nu - 1)?) {
            return Ok(x);
        }
    }
    Err(Error::Invalid(format!(
        "no witness with x^{} != 0 found although x^{} = 0 is not an identity",
        nu - 1,
        nu - 1
    )))
}
