//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by monomial, so iteration is always in
//! ascending lex order and the leading term is the last entry. No zero
//! coefficient is ever stored.

use std::fmt;
use std::sync::Arc;

use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::collections::BTreeMap;

use super::monomial::{Monomial, VarList};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: Arc<VarList>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(vars: Arc<VarList>) -> Polynomial {
        Polynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<VarList>, c: BigRational) -> Polynomial {
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            let unit = Monomial::unit(p.vars.len());
            p.terms.insert(unit, c);
        }
        p
    }

    pub fn monomial(vars: Arc<VarList>, m: Monomial, c: BigRational) -> Polynomial {
        assert_eq!(m.nvars(), vars.len());
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(vars: Arc<VarList>, i: usize) -> Polynomial {
        let m = Monomial::var_pow(vars.len(), i, 1);
        Polynomial::monomial(vars, m, BigRational::one())
    }

    pub fn vars(&self) -> &Arc<VarList> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        assert_eq!(m.nvars(), self.nvars());
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn compatible(&self, other: &Polynomial) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || *self.vars == *other.vars,
            "polynomials over different variable lists"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.compatible(other);
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.compatible(other);
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.compatible(other);
        let mut out = Polynomial::zero(self.vars.clone());
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Multiply by c * m.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        let mut out = Polynomial::zero(self.vars.clone());
        if c.is_zero() {
            return out;
        }
        for (m1, c1) in self.terms() {
            out.add_term(m1.mul(m), c1 * c);
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        self.mul_term(&Monomial::unit(self.nvars()), c)
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.vars.clone(), BigRational::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn max_total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Leading term first.
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let abs = c.abs();
            let sign = c.is_negative();
            if idx == 0 {
                if sign {
                    write!(f, "-")?;
                }
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_part = if abs.is_one() && !m.is_unit() {
                String::new()
            } else if abs.is_integer() {
                abs.numer().to_string()
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            let mono_part = if m.is_unit() {
                String::new()
            } else {
                m.display(&self.vars)
            };
            match (coeff_part.is_empty(), mono_part.is_empty()) {
                (false, false) => write!(f, "{coeff_part}*{mono_part}")?,
                (false, true) => write!(f, "{coeff_part}")?,
                (true, false) => write!(f, "{mono_part}")?,
                (true, true) => write!(f, "1")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<VarList> {
        Arc::new(VarList::from_names(&["x", "y", "z"]).unwrap())
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn terms_cancel_to_zero() {
        let vars = ring();
        let x = Polynomial::var(vars.clone(), 0);
        let diff = x.sub(&x);
        assert!(diff.is_zero());
        assert_eq!(diff.to_string(), "0");
    }

    #[test]
    fn leading_term_is_lex_largest() {
        let vars = ring();
        // y^2 - x*z has leading monomial x*z.
        let mut p = Polynomial::zero(vars);
        p.add_term(Monomial::from_exponents(vec![0, 2, 0]), rat(1));
        p.add_term(Monomial::from_exponents(vec![1, 0, 1]), rat(-1));
        assert_eq!(
            p.leading_monomial(),
            Some(&Monomial::from_exponents(vec![1, 0, 1]))
        );
        assert_eq!(p.leading_coefficient(), Some(&rat(-1)));
        assert_eq!(p.monic().to_string(), "x*z - y^2");
    }

    #[test]
    fn product_and_display() {
        let vars = ring();
        let x = Polynomial::var(vars.clone(), 0);
        let y = Polynomial::var(vars.clone(), 1);
        let p = x.add(&y).mul(&x.sub(&y));
        // (x+y)(x-y) = x^2 - y^2
        assert_eq!(p.to_string(), "x^2 - y^2");
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn display_coefficients() {
        let vars = ring();
        let mut p = Polynomial::zero(vars);
        p.add_term(Monomial::from_exponents(vec![1, 0, 0]), rat(1) / rat(2));
        p.add_term(Monomial::unit(3), rat(-3));
        assert_eq!(p.to_string(), "1/2*x - 3");
    }
}
