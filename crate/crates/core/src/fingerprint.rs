//! Extension-stable invariant fingerprints for non-isomorphism certificates.
//!
//! Every field of a [`Fingerprint`] is computed from ranks of linear systems
//! over the ground field (or from identities, which are linear conditions on
//! the structure tensor). Ranks do not change under base-field extension, so
//! two algebras with different fingerprints are non-isomorphic over every
//! extension field, in particular over the algebraic closure. Equal
//! fingerprints decide nothing.
//!
//! Basis-dependent data (such as left-multiplication ranks in the given
//! basis) is deliberately excluded.

use std::fmt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::morphism::derivation_space;
use crate::powers::{nilindex_value, power_chain};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim: usize,
    /// dim A^1, dim A^2, ... until the chain vanishes or repeats.
    pub power_chain_dims: Vec<usize>,
    /// First k with A^k = 0, if the chain vanishes within its bound.
    pub nilpotency_class: Option<u32>,
    /// Smallest nu with x^nu = 0 identically; None when no nilindex exists
    /// up to the tested bound.
    pub nilindex: Option<u32>,
    pub annihilator_dim: usize,
    pub derivation_dim: usize,
    pub associative: bool,
}

pub fn fingerprint(a: &Algebra) -> Result<Fingerprint> {
    let chain = power_chain(a);
    let nilindex = match nilindex_value(a) {
        Ok(nu) => Some(nu),
        Err(Error::NoNilindex { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(Fingerprint {
        dim: a.dim(),
        power_chain_dims: chain.dims(),
        nilpotency_class: chain.vanished_at,
        nilindex,
        annihilator_dim: a.annihilator().dim(),
        derivation_dim: derivation_space(a).0,
        associative: a.is_associative(),
    })
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let chain: Vec<String> = self.power_chain_dims.iter().map(|d| d.to_string()).collect();
        write!(
            f,
            "dim={} chain=({}) class={} nilindex={} ann={} der={} assoc={}",
            self.dim,
            chain.join(","),
            self.nilpotency_class
                .map_or("-".to_string(), |c| c.to_string()),
            self.nilindex.map_or("-".to_string(), |c| c.to_string()),
            self.annihilator_dim,
            self.derivation_dim,
            if self.associative { "yes" } else { "no" },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Symmetrize;
    use crate::field::Field;
    use crate::matrix::Matrix;
    use crate::morphism::{conjugate, LinearMap};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q() -> Field {
        Field::rationals()
    }

    /// e1e1 = e2, e1e3 = e4.
    fn a14() -> Algebra {
        Algebra::from_products(
            q(),
            4,
            &[((0, 0), vec![(1, q().one())]), ((0, 2), vec![(3, q().one())])],
            Symmetrize::Yes,
        )
        .unwrap()
    }

    /// e1e1 = e2, e3e4 = e2.
    fn a24() -> Algebra {
        Algebra::from_products(
            q(),
            4,
            &[((0, 0), vec![(1, q().one())]), ((2, 3), vec![(1, q().one())])],
            Symmetrize::Yes,
        )
        .unwrap()
    }

    #[test]
    fn annihilator_separates_a14_from_a24() {
        let f1 = fingerprint(&a14()).unwrap();
        let f2 = fingerprint(&a24()).unwrap();
        assert_eq!(f1.annihilator_dim, 2);
        assert_eq!(f2.annihilator_dim, 1);
        assert_ne!(f1, f2);
    }

    #[test]
    fn invariance_under_base_change() {
        let a = a14();
        let base = fingerprint(&a).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..5 {
            let p = LinearMap::new(Matrix::random_invertible(q(), 4, &mut rng));
            let b = conjugate(&a, &p).unwrap();
            assert_eq!(fingerprint(&b).unwrap(), base);
        }
    }

    #[test]
    fn na5_power_chain_dims() {
        let a = crate::normalize5::normal_form_dim5(q());
        let fp = fingerprint(&a).unwrap();
        assert_eq!(fp.power_chain_dims, vec![5, 3, 1, 0]);
        assert_eq!(fp.nilpotency_class, Some(4));
        assert!(!fp.associative);
    }

    #[test]
    fn no_nilindex_recorded_as_none() {
        let idem =
            Algebra::from_products(q(), 1, &[((0, 0), vec![(0, q().one())])], Symmetrize::Yes)
                .unwrap();
        let fp = fingerprint(&idem).unwrap();
        assert_eq!(fp.nilindex, None);
        assert!(fp.nilpotency_class.is_none());
    }
}
