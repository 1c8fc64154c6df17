//! Exact elements of cyclotomic number fields.
//!
//! An element of `Q(zeta_N)` is stored as its coordinate vector in the power
//! basis `1, zeta, ..., zeta^(phi(N)-1)`, i.e. reduced modulo the N-th
//! cyclotomic polynomial. Reduction modulo `Phi_N` (and not `x^N - 1`) makes
//! the representation canonical, so equality of character sums is a plain
//! coefficient comparison.
//!
//! Elements of different orders are compatible: binary operations promote
//! both sides to the lcm order through `zeta_N = zeta_M^(M/N)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{euler_phi, is_prime, rat_to_str, Rat};
use crate::{Error, Result};

/// Coefficients of the N-th cyclotomic polynomial, ascending degree.
///
/// Computed as `(x^N - 1) / prod_(d | N, d < N) Phi_d` by exact division,
/// memoised process-wide.
fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    static CACHE: Mutex<Option<HashMap<u64, Vec<BigInt>>>> = Mutex::new(None);
    let mut guard = CACHE.lock().unwrap();
    let cache = guard.get_or_insert_with(HashMap::new);
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    let result = compute_cyclotomic(n, cache);
    cache.insert(n, result.clone());
    result
}

fn compute_cyclotomic(n: u64, cache: &mut HashMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if n == 1 {
        return vec![BigInt::from(-1), BigInt::one()];
    }
    // x^n - 1
    let mut f = vec![BigInt::zero(); (n + 1) as usize];
    f[0] = BigInt::from(-1);
    f[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = match cache.get(&d) {
                Some(p) => p.clone(),
                None => {
                    let p = compute_cyclotomic(d, cache);
                    cache.insert(d, p.clone());
                    p
                }
            };
            f = exact_int_div(&f, &phi_d);
        }
    }
    f
}

/// Exact division of integer polynomials; panics on a nonzero remainder,
/// which cannot happen for cyclotomic factors.
fn exact_int_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let dn = rem.len() - 1;
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        quot[k] = c.clone();
        if c.is_zero() {
            continue;
        }
        for (i, dc) in den.iter().enumerate() {
            let v = &rem[k + i] - dc * &c;
            rem[k + i] = v;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "non-exact division");
    quot
}

/// An exact element of the cyclotomic field `Q(zeta_order)`.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloNum {
    order: u64,
    /// Length `phi(order)`; coordinate `i` multiplies `zeta^i`.
    coeffs: Vec<Rat>,
}

impl CycloNum {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn zero() -> Self {
        CycloNum { order: 1, coeffs: vec![Rat::zero()] }
    }

    pub fn one() -> Self {
        CycloNum::from_rat(Rat::one())
    }

    pub fn from_rat(x: Rat) -> Self {
        CycloNum { order: 1, coeffs: vec![x] }
    }

    pub fn from_int(n: i64) -> Self {
        CycloNum::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    /// `zeta_order^power`.
    pub fn root_of_unity(order: u64, power: i64) -> Self {
        assert!(order >= 1);
        let power = power.rem_euclid(order as i64) as u64;
        let mut coeffs = vec![Rat::zero(); order as usize];
        coeffs[power as usize] = Rat::one();
        CycloNum::reduce(order, coeffs)
    }

    /// Builds an element from an arbitrary-degree polynomial in `zeta_order`,
    /// reducing modulo the cyclotomic polynomial.
    pub fn reduce(order: u64, mut coeffs: Vec<Rat>) -> Self {
        let phi = euler_phi(order) as usize;
        let modulus = cyclotomic_poly(order);
        // Polynomial remainder by the monic Phi_order.
        while coeffs.len() > phi {
            let top = coeffs.len() - 1;
            let c = coeffs[top].clone();
            coeffs.pop();
            if c.is_zero() {
                continue;
            }
            let shift = top - phi;
            for (i, m) in modulus.iter().take(phi).enumerate() {
                let delta = Rat::from_integer(m.clone()) * &c;
                coeffs[shift + i] -= delta;
            }
        }
        coeffs.resize(phi, Rat::zero());
        CycloNum { order, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational image, when the element lies in the prime field.
    pub fn try_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the element in `Q(zeta_target)`; `order` must divide
    /// `target`.
    pub fn promote(&self, target: u64) -> CycloNum {
        if target == self.order {
            return self.clone();
        }
        assert!(target % self.order == 0, "promotion target must be a multiple of the order");
        let step = (target / self.order) as usize;
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() * step];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        CycloNum::reduce(target, coeffs)
    }

    fn common_order(&self, other: &CycloNum) -> u64 {
        self.order.lcm(&other.order)
    }

    pub fn pow(&self, e: u64) -> CycloNum {
        let mut acc = CycloNum::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the cyclotomic polynomial.
    pub fn inverse(&self) -> Result<CycloNum> {
        if self.is_zero() {
            return Err(Error::Division("inverse of zero cyclotomic element".into()));
        }
        let modulus: Vec<Rat> = cyclotomic_poly(self.order)
            .into_iter()
            .map(Rat::from_integer)
            .collect();
        // Extended gcd over Q[x]: gcd(self, Phi) = 1 since Phi is irreducible.
        let (mut r0, mut r1) = (modulus, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (vec![], vec![Rat::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is a nonzero constant gcd; divide through.
        debug_assert_eq!(r0.len(), 1);
        let inv_gcd = Rat::one() / r0[0].clone();
        let coeffs = s0.into_iter().map(|c| c * &inv_gcd).collect();
        Ok(CycloNum::reduce(self.order, coeffs))
    }

    /// Complex conjugation, `zeta -> zeta^(-1)`.
    pub fn conj(&self) -> CycloNum {
        let n = self.order as i64;
        let mut acc = CycloNum::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = CycloNum::root_of_unity(self.order, n - i as i64);
            for x in term.coeffs.iter_mut() {
                *x *= c;
            }
            acc = &acc + &term;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> CycloNum {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// True when every coefficient denominator is a power of `p` times a
    /// divisor of `char_order`; the integrality shape of exact integral
    /// values.
    pub fn denominators_divide(&self, p: u64, char_order: u64) -> bool {
        self.coeffs.iter().all(|c| {
            let mut d = c.denom().magnitude().clone();
            let pb = num_bigint::BigUint::from(p);
            while (&d % &pb).is_zero() && !d.is_one() {
                d /= &pb;
            }
            let co = BigInt::from(char_order);
            co.magnitude().is_multiple_of(&d)
        })
    }
}

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().map_or(false, Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_divmod(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let den = den.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        return (vec![], trim(rem));
    }
    let mut quot = vec![Rat::zero(); rem.len() - dd];
    for k in (0..=rem.len() - 1 - dd).rev() {
        let c = rem[k + dd].clone() / lead.clone();
        quot[k] = c.clone();
        if c.is_zero() {
            continue;
        }
        for (i, dc) in den.iter().enumerate() {
            let v = &rem[k + i] - dc * &c;
            rem[k + i] = v;
        }
    }
    (trim(quot), trim(rem))
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let v = &out[i + j] + x * y;
            out[i + j] = v;
        }
    }
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = a.to_vec();
    out.resize(out.len().max(b.len()), Rat::zero());
    for (i, y) in b.iter().enumerate() {
        let v = &out[i] - y;
        out[i] = v;
    }
    trim(out)
}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        let n = self.common_order(rhs);
        let a = self.promote(n);
        let b = rhs.promote(n);
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| x + y)
            .collect();
        CycloNum { order: n, coeffs }
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self + &rhs.neg()
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        (&self).neg()
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        let n = self.common_order(rhs);
        let a = self.promote(n);
        let b = rhs.promote(n);
        CycloNum::reduce(n, poly_mul(&a.coeffs, &b.coeffs))
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: CycloNum) -> CycloNum {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl num_traits::Zero for CycloNum {
    fn zero() -> Self {
        CycloNum::zero()
    }
    fn is_zero(&self) -> bool {
        CycloNum::is_zero(self)
    }
}

impl num_traits::One for CycloNum {
    fn one() -> Self {
        CycloNum::one()
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.try_rational() {
            return write!(f, "{}", rat_to_str(&r));
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if i == 0 {
                write!(f, "{}", rat_to_str(&a))?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", rat_to_str(&a))?;
                }
                write!(f, "z{}^{}", self.order, i)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The standard additive character of `Q_p`, evaluated exactly.
///
/// For a rational `x`, write its p-part fractional class as `u / p^m`; the
/// value is `zeta_(p^m)^u`, i.e. `e(x) = exp(2 pi i {x}_p)`. The value is
/// well defined on `Q_p / Z_p`.
pub fn additive_char_value(x: &Rat, p: u64) -> Result<CycloNum> {
    if !is_prime(p) {
        return Err(Error::argument(format!("{p} is not prime")));
    }
    if x.is_zero() {
        return Ok(CycloNum::one());
    }
    let pb = BigInt::from(p);
    // Split the denominator as p^m * d with gcd(d, p) = 1.
    let mut d = x.denom().clone();
    let mut m = 0u64;
    loop {
        let (q, r) = d.div_rem(&pb);
        if r.is_zero() {
            m += 1;
            d = q;
        } else {
            break;
        }
    }
    if m == 0 {
        return Ok(CycloNum::one());
    }
    let pm = pb.pow(m as u32);
    // x = a / (p^m d); the p-fractional part is (a * d^{-1} mod p^m) / p^m.
    let a = x.numer().mod_floor(&(&pm * &d));
    let d_inv = mod_inverse(&d, &pm)
        .ok_or_else(|| Error::internal("denominator not invertible mod p^m"))?;
    let u = (a * d_inv).mod_floor(&pm);
    let u: u64 = u
        .to_string()
        .parse()
        .map_err(|_| Error::Budget(format!("additive character order p^{m} too large")))?;
    Ok(CycloNum::root_of_unity(
        p.checked_pow(m as u32)
            .ok_or_else(|| Error::Budget(format!("additive character order p^{m} overflows")))?,
        u as i64,
    ))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn cyclotomic_polynomials() {
        let to_i: fn(&[BigInt]) -> Vec<i64> =
            |v| v.iter().map(|x| x.to_string().parse().unwrap()).collect();
        assert_eq!(to_i(&cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(to_i(&cyclotomic_poly(2)), vec![1, 1]);
        assert_eq!(to_i(&cyclotomic_poly(3)), vec![1, 1, 1]);
        assert_eq!(to_i(&cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(to_i(&cyclotomic_poly(6)), vec![1, -1, 1]);
        assert_eq!(to_i(&cyclotomic_poly(9)), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(to_i(&cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn root_of_unity_relations() {
        for n in [2u64, 3, 4, 5, 6, 8, 9, 12] {
            let z = CycloNum::root_of_unity(n, 1);
            assert_eq!(z.pow(n), CycloNum::one(), "zeta_{n}^{n} = 1");
            let mut sum = CycloNum::zero();
            for k in 0..n {
                sum = &sum + &CycloNum::root_of_unity(n, k as i64);
            }
            assert!(sum.is_zero(), "sum of all {n}-th roots vanishes");
        }
    }

    #[test]
    fn rational_embedding_compares_equal() {
        let five = CycloNum::from_int(5);
        let promoted = five.promote(12);
        assert_eq!(promoted.try_rational(), Some(rat(5, 1)));
        assert_eq!(&promoted - &CycloNum::from_int(5), CycloNum::zero().promote(12));
    }

    #[test]
    fn mixed_order_arithmetic() {
        // zeta_3 * zeta_4 = zeta_12^7
        let a = CycloNum::root_of_unity(3, 1);
        let b = CycloNum::root_of_unity(4, 1);
        assert_eq!(&a * &b, CycloNum::root_of_unity(12, 7));
    }

    #[test]
    fn inverse_round_trip() {
        let x = &CycloNum::root_of_unity(5, 2) + &CycloNum::from_int(3);
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, CycloNum::one().promote(5));
        assert!(CycloNum::zero().inverse().is_err());
    }

    #[test]
    fn conjugation_inverts_roots() {
        let z = CycloNum::root_of_unity(9, 2);
        assert_eq!(z.conj(), CycloNum::root_of_unity(9, -2));
    }

    #[test]
    fn additive_character_values() {
        // e(1/3) = zeta_3
        assert_eq!(
            additive_char_value(&rat(1, 3), 3).unwrap(),
            CycloNum::root_of_unity(3, 1)
        );
        // Prime-to-p parts do not contribute: e(1/2) at p = 3 is 1.
        assert_eq!(additive_char_value(&rat(1, 2), 3).unwrap(), CycloNum::one());
        // e(5/9 + 1) = zeta_9^5
        assert_eq!(
            additive_char_value(&rat(14, 9), 3).unwrap(),
            CycloNum::root_of_unity(9, 5)
        );
        // Mixed denominator: 1/6 = 1/2 * 1/3; at p=3 the class is (1/2 mod 3)/3 = 2/3.
        assert_eq!(
            additive_char_value(&rat(1, 6), 3).unwrap(),
            CycloNum::root_of_unity(3, 2)
        );
        // Additivity on a sample.
        let x = rat(5, 27);
        let y = rat(7, 9);
        let lhs = additive_char_value(&(x.clone() + y.clone()), 3).unwrap();
        let rhs = &additive_char_value(&x, 3).unwrap() * &additive_char_value(&y, 3).unwrap();
        assert_eq!(lhs, rhs);
    }
}
