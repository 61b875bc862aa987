//! Monomials as exponent vectors over a declared, ordered variable list.
//!
//! The derived `Ord` on the exponent vector is exactly the lexicographic
//! monomial order with earlier variables larger (x > y > z ...), the only
//! order this crate uses.

use std::fmt;

use crate::error::{Error, Result};

/// An ordered list of distinct variable names; position = precedence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarList(Vec<String>);

impl VarList {
    pub fn new(names: Vec<String>) -> Result<VarList> {
        if names.is_empty() {
            return Err(Error::Invalid("empty variable list".to_string()));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::Invalid(format!("invalid variable name '{n}'")));
            }
            if names[..i].contains(n) {
                return Err(Error::Invalid(format!("duplicate variable '{n}'")));
            }
        }
        Ok(VarList(names))
    }

    pub fn from_names(names: &[&str]) -> Result<VarList> {
        VarList::new(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }
}

impl fmt::Display for VarList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(","))
    }
}

/// Exponent vector; `Ord` is the lex order induced by the variable list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn unit(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn var_pow(nvars: usize, var: usize, exp: u32) -> Monomial {
        let mut e = vec![0; nvars];
        e[var] = exp;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Monomial {
        Monomial(exps)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// self / other, if divisible.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial(
                self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn display(&self, vars: &VarList) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(vars.name(i).to_string()),
                _ => parts.push(format!("{}^{}", vars.name(i), e)),
            }
        }
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_matches_variable_precedence() {
        // x > y > z: x = (1,0,0) beats y^5 = (0,5,0).
        let x = Monomial::from_exponents(vec![1, 0, 0]);
        let y5 = Monomial::from_exponents(vec![0, 5, 0]);
        let xz = Monomial::from_exponents(vec![1, 0, 1]);
        let y2 = Monomial::from_exponents(vec![0, 2, 0]);
        assert!(x > y5);
        assert!(xz > y2);
    }

    #[test]
    fn divisibility_and_quotient() {
        let xy = Monomial::from_exponents(vec![1, 1]);
        let x2y3 = Monomial::from_exponents(vec![2, 3]);
        assert!(xy.divides(&x2y3));
        assert_eq!(
            x2y3.div(&xy),
            Some(Monomial::from_exponents(vec![1, 2]))
        );
        assert_eq!(xy.div(&x2y3), None);
        assert_eq!(xy.lcm(&x2y3), x2y3);
    }

    #[test]
    fn display_forms() {
        let vars = VarList::from_names(&["x", "y"]).unwrap();
        assert_eq!(Monomial::unit(2).display(&vars), "1");
        assert_eq!(
            Monomial::from_exponents(vec![2, 1]).display(&vars),
            "x^2*y"
        );
    }

    #[test]
    fn varlist_rejects_duplicates() {
        assert!(VarList::from_names(&["x", "x"]).is_err());
        assert!(VarList::from_names(&[]).is_err());
    }
}
