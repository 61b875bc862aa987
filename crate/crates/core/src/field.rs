//! Exact scalars over Q and over prime fields F_p with p >= 5.
//!
//! A [`Scalar`] is plain data: an arbitrary-precision rational in lowest terms,
//! or a residue in `[0, p)`. It does not know which field it belongs to; the
//! field descriptor is carried by containers (matrices, algebras) and all
//! arithmetic goes through [`Field`]. Mixing scalars from different fields is
//! a construction-time error in the containers and a panic here.
//!
//! Characteristics 2 and 3 are rejected outright: division by 2 is pervasive
//! in the identities this crate manipulates.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficient domain descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rational numbers Q.
    Rationals,
    /// The prime field F_p, p a prime >= 5.
    Prime(u64),
}

/// An exact scalar: a rational in lowest terms or a residue mod p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u64),
}

impl Field {
    /// The rational field.
    pub fn rationals() -> Field {
        Field::Rationals
    }

    /// The prime field F_p. Rejects p < 5 and composite p.
    pub fn prime(p: u64) -> Result<Field> {
        if p < 5 || !is_prime(p) {
            return Err(Error::InvalidCharacteristic(p));
        }
        Ok(Field::Prime(p))
    }

    /// 0 for Q, p for F_p.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Prime(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::one()),
            Field::Prime(_) => Scalar::Mod(1),
        }
    }

    /// Embed a signed integer.
    pub fn integer(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Mod((n.rem_euclid(*p as i64)) as u64),
        }
    }

    /// Embed the fraction num/den. Panics if den == 0 or den vanishes mod p;
    /// use [`Field::from_rational`] for fallible conversion of parsed input.
    pub fn ratio(&self, num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        match self {
            Field::Rationals => {
                Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
            }
            Field::Prime(_) => {
                let n = self.integer(num);
                let d = self.integer(den);
                self.div(&n, &d).expect("denominator vanishes mod p")
            }
        }
    }

    /// Convert an exact rational into this field. Over F_p the denominator
    /// must be invertible mod p.
    pub fn from_rational(&self, r: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rationals => Ok(Scalar::Rat(r.clone())),
            Field::Prime(p) => {
                let num = reduce_bigint_mod(r.numer(), *p);
                let den = reduce_bigint_mod(r.denom(), *p);
                if den == 0 {
                    return Err(Error::NotReducible(r.to_string(), *p));
                }
                Ok(Scalar::Mod(mod_mul(num, mod_inv(den, *p), *p)))
            }
        }
    }

    /// True iff the scalar is a well-formed element of this field.
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Rationals, Scalar::Rat(_)) => true,
            (Field::Prime(p), Scalar::Mod(r)) => r < p,
            _ => false,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + y) % p),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + p - y) % p),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Field::Prime(p), Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod(mod_mul(*x, *y, *p)),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (Field::Prime(p), Scalar::Mod(x)) => Scalar::Mod(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, a) {
            (Field::Rationals, Scalar::Rat(x)) => Scalar::Rat(x.recip()),
            (Field::Prime(p), Scalar::Mod(x)) => Scalar::Mod(mod_inv(*x, *p)),
            _ => panic!("scalar does not belong to field {self:?}"),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        let binv = self.inv(b)?;
        Ok(self.mul(a, &binv))
    }

    /// a + c*b, the fused step used all over Gaussian elimination.
    pub fn add_mul(&self, a: &Scalar, c: &Scalar, b: &Scalar) -> Scalar {
        if c.is_zero() || b.is_zero() {
            return a.clone();
        }
        self.add(a, &self.mul(c, b))
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(r) => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod(r) => *r == 1,
        }
    }

    /// The underlying rational, if this is a Q-scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod(_) => None,
        }
    }

    /// Integer value for integral Q-scalars that fit in i64.
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            Scalar::Rat(r) if r.is_integer() => r.numer().to_i64(),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod(r) => write!(f, "{r}"),
        }
    }
}

fn reduce_bigint_mod(n: &BigInt, p: u64) -> u64 {
    let m = n % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    m.to_u64().expect("residue fits in u64")
}

pub(crate) fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p), "cannot invert zero mod {p}");
    mod_pow(a, p - 2, p)
}

/// Deterministic Miller-Rabin, valid for all u64.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_char_2_and_3() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(3).is_err());
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(5).is_ok());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(101).is_ok());
    }

    #[test]
    fn rational_normalization() {
        let q = Field::rationals();
        let a = q.ratio(2, 4);
        let b = q.ratio(1, 2);
        assert_eq!(a, b);
        let c = q.ratio(1, -2);
        assert_eq!(q.add(&b, &c), q.zero());
        assert_eq!(c.to_string(), "-1/2");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = Field::prime(5).unwrap();
        let a = f5.integer(7); // 2
        let b = f5.integer(-1); // 4
        assert_eq!(f5.add(&a, &b), f5.integer(1));
        assert_eq!(f5.mul(&a, &b), f5.integer(3));
        assert_eq!(f5.div(&f5.one(), &a).unwrap(), f5.integer(3)); // 2*3 = 6 = 1
        assert_eq!(f5.ratio(1, 2), f5.integer(3));
    }

    #[test]
    fn inverse_of_zero_fails() {
        let q = Field::rationals();
        assert!(q.inv(&q.zero()).is_err());
        let f7 = Field::prime(7).unwrap();
        assert!(f7.inv(&f7.zero()).is_err());
    }

    #[test]
    fn from_rational_mod_p() {
        let f5 = Field::prime(5).unwrap();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f5.from_rational(&half).unwrap(), f5.integer(3));
        let fifth = BigRational::new(BigInt::from(1), BigInt::from(5));
        assert!(f5.from_rational(&fifth).is_err());
    }
}
