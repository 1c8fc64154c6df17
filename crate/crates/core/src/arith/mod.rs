//! Exact number and polynomial arithmetic underlying every other module.

mod cyclo;
mod matrix;
mod poly;
mod residue;

pub use cyclo::{additive_char_value, CycloNum};
pub use matrix::{padic_elementary_divisors, smith_normal_form, IntMatrix};
pub use poly::{Coeff, LaurentSeries, Poly, RatFunc, TruncSeries};
pub use residue::ResidueInt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational number, always stored fully reduced with positive
/// denominator.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `num/den` as a reduced rational. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"num"` or `"num/den"` into a [`Rat`].
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::argument(format!("bad rational literal {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::argument(format!("bad rational literal {s:?}")))?;
    if den.is_zero() {
        return Err(Error::argument(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(num, den))
}

/// Canonical `num/den` rendering (plain integer when the denominator is 1).
pub fn rat_to_str(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Deterministic primality test by trial division; sufficient for the
/// desk-scale moduli this crate works with.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// p-adic valuation of a rational, with a dedicated sentinel at zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PadicVal {
    Finite(i64),
    Infinity,
}

impl PadicVal {
    pub fn finite(self) -> Option<i64> {
        match self {
            PadicVal::Finite(v) => Some(v),
            PadicVal::Infinity => None,
        }
    }

    /// `max(0, -v)`, the exponent this valuation contributes to a
    /// denominator ideal. Zero contributes nothing.
    pub fn denominator_exponent(self) -> i64 {
        match self {
            PadicVal::Finite(v) => (-v).max(0),
            PadicVal::Infinity => 0,
        }
    }
}

fn int_val(n: &BigInt, p: u64) -> Option<i64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0i64;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&n, &p);
        if r.is_zero() {
            v += 1;
            n = q;
        } else {
            return Some(v);
        }
    }
}

/// Returns `v` with `x = p^v * u` for a p-unit `u`, or the infinity sentinel
/// for `x = 0`.
pub fn padic_val(x: &Rat, p: u64) -> Result<PadicVal> {
    if !is_prime(p) {
        return Err(Error::argument(format!("{p} is not prime")));
    }
    if x.is_zero() {
        return Ok(PadicVal::Infinity);
    }
    let vn = int_val(x.numer(), p).expect("nonzero numerator");
    let vd = int_val(x.denom(), p).expect("nonzero denominator");
    Ok(PadicVal::Finite(vn - vd))
}

/// Euler's totient, by factorisation through trial division.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            while n % d == 0 {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn padic_val_examples() {
        assert_eq!(padic_val(&rat(9, 4), 3).unwrap(), PadicVal::Finite(2));
        assert_eq!(padic_val(&rat_int(1), 5).unwrap(), PadicVal::Finite(0));
        assert_eq!(padic_val(&rat(8, 3), 2).unwrap(), PadicVal::Finite(3));
        assert_eq!(padic_val(&rat_int(0), 3).unwrap(), PadicVal::Infinity);
        assert!(padic_val(&rat_int(1), 6).is_err());
    }

    #[test]
    fn rational_round_trip() {
        for s in ["3", "-7/2", "0", "22/7"] {
            let x = rat_from_str(s).unwrap();
            assert_eq!(rat_to_str(&x), s);
        }
        assert_eq!(rat_to_str(&rat_from_str("4/2").unwrap()), "2");
        assert!(rat_from_str("1/0").is_err());
    }

    #[test]
    fn phi_small_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(25), 20);
    }
}
