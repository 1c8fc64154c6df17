//! Residue ring arithmetic modulo a prime power.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An element of `Z/p^m`, stored reduced.
///
/// Operations check that both operands carry the same modulus; mixing
/// moduli is a programming error and panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidueInt {
    modulus: u64,
    value: u64,
}

impl ResidueInt {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus > 1, "modulus must exceed 1");
        ResidueInt { modulus, value: value.rem_euclid(modulus as i64) as u64 }
    }

    pub fn zero(modulus: u64) -> Self {
        ResidueInt::new(0, modulus)
    }

    pub fn one(modulus: u64) -> Self {
        ResidueInt::new(1, modulus)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, other: ResidueInt) {
        assert_eq!(self.modulus, other.modulus, "mixed residue moduli");
    }

    pub fn add(self, other: ResidueInt) -> ResidueInt {
        self.check(other);
        ResidueInt {
            modulus: self.modulus,
            value: ((self.value as u128 + other.value as u128) % self.modulus as u128) as u64,
        }
    }

    pub fn sub(self, other: ResidueInt) -> ResidueInt {
        self.check(other);
        self.add(other.neg())
    }

    pub fn neg(self) -> ResidueInt {
        ResidueInt {
            modulus: self.modulus,
            value: if self.value == 0 { 0 } else { self.modulus - self.value },
        }
    }

    pub fn mul(self, other: ResidueInt) -> ResidueInt {
        self.check(other);
        ResidueInt {
            modulus: self.modulus,
            value: ((self.value as u128 * other.value as u128) % self.modulus as u128) as u64,
        }
    }

    pub fn pow(self, mut e: u64) -> ResidueInt {
        let mut base = self;
        let mut acc = ResidueInt::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a unit; errors when the value shares a factor with the
    /// modulus.
    pub fn inverse(self) -> Result<ResidueInt> {
        let (mut t, mut new_t) = (0i128, 1i128);
        let (mut r, mut new_r) = (self.modulus as i128, self.value as i128);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        if r != 1 {
            return Err(Error::Division(format!(
                "{} is not a unit mod {}",
                self.value, self.modulus
            )));
        }
        Ok(ResidueInt::new(t.rem_euclid(self.modulus as i128) as i64, self.modulus))
    }

    /// Reduction to a smaller modulus dividing the current one.
    pub fn reduce_to(self, modulus: u64) -> ResidueInt {
        assert!(self.modulus % modulus == 0);
        ResidueInt { modulus, value: self.value % modulus }
    }
}

impl fmt::Debug for ResidueInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for ResidueInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_operations() {
        let m = 27;
        let a = ResidueInt::new(20, m);
        let b = ResidueInt::new(15, m);
        assert_eq!(a.add(b).value(), 8);
        assert_eq!(a.mul(b).value(), (20 * 15) % 27);
        assert_eq!(a.sub(a).value(), 0);
        assert_eq!(ResidueInt::new(-1, m).value(), 26);
    }

    #[test]
    fn inverses() {
        let a = ResidueInt::new(4, 27);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(inv).value(), 1);
        assert!(ResidueInt::new(3, 27).inverse().is_err());
    }

    #[test]
    fn fermat_pattern() {
        for v in 1..9 {
            let a = ResidueInt::new(v, 9);
            if v % 3 != 0 {
                assert_eq!(a.pow(3).reduce_to(3), a.reduce_to(3));
            }
        }
    }
}
