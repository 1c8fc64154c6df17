//! Dense polynomials, truncated power series and rational functions over a
//! pluggable coefficient ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{CycloNum, Rat};
use crate::{Error, Result};

/// Coefficient ring bound shared by [`Poly`], [`TruncSeries`] and
/// [`RatFunc`].
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl Coeff for Rat {}
impl Coeff for CycloNum {}

/// Dense univariate polynomial, ascending degree, trailing zeros stripped.
#[derive(Clone, PartialEq)]
pub struct Poly<R: Coeff> {
    coeffs: Vec<R>,
}

impl<R: Coeff> Poly<R> {
    pub fn new(coeffs: Vec<R>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![R::one()] }
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// `1 - c t`.
    pub fn one_minus(c: R) -> Self {
        Poly::new(vec![R::one(), -c])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, Coeff::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn mul(&self, other: &Poly<R>) -> Poly<R> {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    pub fn add(&self, other: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Poly::new(out)
    }

    /// Evaluation by Horner's rule.
    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Truncated expansion of the polynomial itself.
    pub fn to_series(&self, depth: usize) -> TruncSeries<R> {
        let mut coeffs: Vec<R> = (0..=depth).map(|i| self.coeff(i)).collect();
        coeffs.truncate(depth + 1);
        TruncSeries { coeffs }
    }
}

impl<R: Coeff> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c:?}"),
                1 => format!("{c:?}*t"),
                _ => format!("{c:?}*t^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Power series known modulo `t^(depth+1)`: exactly `depth + 1` stored
/// coefficients. Arithmetic never reports coefficients beyond the depth.
#[derive(Clone, PartialEq)]
pub struct TruncSeries<R: Coeff> {
    coeffs: Vec<R>,
}

impl<R: Coeff> TruncSeries<R> {
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty());
        TruncSeries { coeffs }
    }

    pub fn zero(depth: usize) -> Self {
        TruncSeries { coeffs: vec![R::zero(); depth + 1] }
    }

    pub fn one(depth: usize) -> Self {
        let mut s = TruncSeries::zero(depth);
        s.coeffs[0] = R::one();
        s
    }

    pub fn depth(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &R {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn truncate(&self, depth: usize) -> TruncSeries<R> {
        assert!(depth <= self.depth(), "cannot extend a truncated series");
        TruncSeries { coeffs: self.coeffs[..=depth].to_vec() }
    }

    fn check_depth(&self, other: &TruncSeries<R>) {
        assert_eq!(self.depth(), other.depth(), "mismatched truncation depths");
    }

    pub fn add(&self, other: &TruncSeries<R>) -> TruncSeries<R> {
        self.check_depth(other);
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &TruncSeries<R>) -> TruncSeries<R> {
        self.check_depth(other);
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn mul(&self, other: &TruncSeries<R>) -> TruncSeries<R> {
        self.check_depth(other);
        let d = self.depth();
        let mut out = vec![R::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(d + 1 - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncSeries { coeffs: out }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coeff::is_zero)
    }
}

impl<R: Coeff> fmt::Debug for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + O(t^{})", Poly::new(self.coeffs.clone()), self.depth() + 1)
    }
}

/// `a / b` modulo `t^(D+1)`; requires a unit constant term in `b`.
pub fn series_divide<R: Coeff>(a: &TruncSeries<R>, b: &TruncSeries<R>) -> Result<TruncSeries<R>>
where
    R: CoeffField,
{
    if a.depth() != b.depth() {
        return Err(Error::argument("series_divide requires equal truncation depths"));
    }
    let b0 = b.coeff(0).clone();
    if b0.is_zero() {
        return Err(Error::Division("series divisor has non-unit constant term".into()));
    }
    let inv_b0 = b0.field_inverse()?;
    let d = a.depth();
    let mut out = vec![R::zero(); d + 1];
    for k in 0..=d {
        let mut acc = a.coeff(k).clone();
        for j in 0..k {
            acc = acc - out[j].clone() * b.coeff(k - j).clone();
        }
        out[k] = acc * inv_b0.clone();
    }
    Ok(TruncSeries { coeffs: out })
}

/// Fields among the coefficient rings: needed for series division and
/// rational-function expansion.
pub trait CoeffField: Coeff {
    fn field_inverse(&self) -> Result<Self>;
}

impl CoeffField for Rat {
    fn field_inverse(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::Division("inverse of zero".into()));
        }
        Ok(Rat::one() / self.clone())
    }
}

impl CoeffField for CycloNum {
    fn field_inverse(&self) -> Result<Self> {
        self.inverse()
    }
}

/// Rational function `num / den`, normalised so the denominator has constant
/// term 1.
#[derive(Clone, PartialEq)]
pub struct RatFunc<R: Coeff> {
    num: Poly<R>,
    den: Poly<R>,
}

impl<R: Coeff + CoeffField> RatFunc<R> {
    pub fn new(num: Poly<R>, den: Poly<R>) -> Result<Self> {
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(Error::argument(
                "rational function denominator must have unit constant term",
            ));
        }
        let inv = d0.field_inverse()?;
        let scale = |p: &Poly<R>| Poly::new(p.coeffs().iter().map(|c| c.clone() * inv.clone()).collect());
        Ok(RatFunc { num: scale(&num), den: scale(&den) })
    }

    pub fn from_poly(num: Poly<R>) -> Self {
        RatFunc { num, den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn num(&self) -> &Poly<R> {
        &self.num
    }

    pub fn den(&self) -> &Poly<R> {
        &self.den
    }

    pub fn mul(&self, other: &RatFunc<R>) -> RatFunc<R> {
        RatFunc { num: self.num.mul(&other.num), den: self.den.mul(&other.den) }
    }

    /// Taylor expansion modulo `t^(depth+1)`.
    pub fn taylor(&self, depth: usize) -> Result<TruncSeries<R>> {
        series_divide(&self.num.to_series(depth), &self.den.to_series(depth))
    }
}

impl<R: Coeff> fmt::Debug for RatFunc<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}

/// Finite window of a Laurent series: coefficients for `X^min_deg` through
/// `X^(min_deg + len - 1)`.
#[derive(Clone, PartialEq)]
pub struct LaurentSeries<R: Coeff> {
    min_deg: i64,
    coeffs: Vec<R>,
}

impl<R: Coeff> LaurentSeries<R> {
    pub fn new(min_deg: i64, coeffs: Vec<R>) -> Self {
        LaurentSeries { min_deg, coeffs }
    }

    pub fn zero_window(min_deg: i64, max_deg: i64) -> Self {
        assert!(max_deg >= min_deg);
        LaurentSeries { min_deg, coeffs: vec![R::zero(); (max_deg - min_deg + 1) as usize] }
    }

    pub fn monomial(deg: i64, c: R) -> Self {
        LaurentSeries { min_deg: deg, coeffs: vec![c] }
    }

    pub fn min_deg(&self) -> i64 {
        self.min_deg
    }

    pub fn max_deg(&self) -> i64 {
        self.min_deg + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, deg: i64) -> R {
        if deg < self.min_deg {
            return R::zero();
        }
        self.coeffs
            .get((deg - self.min_deg) as usize)
            .cloned()
            .unwrap_or_else(R::zero)
    }

    pub fn add_assign_at(&mut self, deg: i64, value: R) {
        assert!(deg >= self.min_deg && deg <= self.max_deg(), "degree outside window");
        let i = (deg - self.min_deg) as usize;
        self.coeffs[i] = self.coeffs[i].clone() + value;
    }

    /// Product, exact on the window both factors cover.
    pub fn mul(&self, other: &LaurentSeries<R>) -> LaurentSeries<R> {
        let min = self.min_deg + other.min_deg;
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        LaurentSeries { min_deg: min, coeffs: out }
    }

    /// Substitution `X -> c X` (multiplies the degree-k coefficient by
    /// `c^k`; negative degrees use the inverse).
    pub fn substitute_scaled(&self, c: &R, c_inv: &R) -> LaurentSeries<R> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let deg = self.min_deg + i as i64;
                let mut factor = R::one();
                if deg >= 0 {
                    for _ in 0..deg {
                        factor = factor * c.clone();
                    }
                } else {
                    for _ in 0..(-deg) {
                        factor = factor * c_inv.clone();
                    }
                }
                a.clone() * factor
            })
            .collect();
        LaurentSeries { min_deg: self.min_deg, coeffs }
    }

    /// Equality of coefficients for every degree in `[lo, hi]`.
    pub fn agrees_with(&self, other: &LaurentSeries<R>, lo: i64, hi: i64) -> bool {
        (lo..=hi).all(|d| self.coeff(d) == other.coeff(d))
    }
}

impl<R: Coeff> fmt::Debug for LaurentSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{:?}*X^{}", c, self.min_deg + i as i64))
            .collect();
        if terms.is_empty() {
            write!(f, "0 on [{}, {}]", self.min_deg, self.max_deg())
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn s(v: &[i64]) -> TruncSeries<Rat> {
        TruncSeries::from_coeffs(v.iter().map(|&x| rat_int(x)).collect())
    }

    #[test]
    fn series_divide_examples() {
        // (1 - t) / (1 - t) = 1
        let a = s(&[1, -1, 0]);
        let q = series_divide(&a, &a).unwrap();
        assert_eq!(q, s(&[1, 0, 0]));

        // (1 - t) / (1 - 3t) to depth 3: long-division oracle 1 + 2t + 6t^2 + 18t^3
        let a = s(&[1, -1, 0, 0]);
        let b = s(&[1, -3, 0, 0]);
        assert_eq!(series_divide(&a, &b).unwrap(), s(&[1, 2, 6, 18]));

        // 0 / (1 + t) = 0
        let z = s(&[0, 0]);
        assert_eq!(series_divide(&z, &s(&[1, 1])).unwrap(), z);

        // Non-unit constant term rejected.
        assert!(series_divide(&a, &s(&[0, 1, 0, 0])).is_err());
    }

    #[test]
    fn divide_then_multiply_back() {
        let a = s(&[2, 5, -3, 7, 1]);
        let b = s(&[1, -2, 4, 0, 3]);
        let q = series_divide(&a, &b).unwrap();
        assert_eq!(q.mul(&b), a);
    }

    #[test]
    fn ratfunc_taylor_examples() {
        // 1/(1 - 3t) at depth 2: geometric series.
        let f = RatFunc::new(Poly::one(), Poly::one_minus(rat_int(3))).unwrap();
        assert_eq!(f.taylor(2).unwrap(), s(&[1, 3, 9]));

        // (1 - t)/(1 - 3t) at depth 3; multiply-back recovers the numerator.
        let f = RatFunc::new(Poly::one_minus(rat_int(1)), Poly::one_minus(rat_int(3))).unwrap();
        let t = f.taylor(3).unwrap();
        assert_eq!(t, s(&[1, 2, 6, 18]));
        assert_eq!(t.mul(&f.den().to_series(3)), f.num().to_series(3));

        // Constant 5 stays 5.
        let c = RatFunc::from_poly(Poly::constant(rat_int(5)));
        assert_eq!(c.taylor(4).unwrap(), s(&[5, 0, 0, 0, 0]));
    }

    #[test]
    fn ratfunc_normalises_denominator() {
        let f = RatFunc::new(
            Poly::new(vec![rat_int(2), rat_int(4)]),
            Poly::new(vec![rat_int(2), rat_int(-6)]),
        )
        .unwrap();
        assert_eq!(f.den().coeff(0), rat_int(1));
        assert_eq!(f.taylor(1).unwrap(), s(&[1, 5]));
        assert_eq!(f.num().coeff(0), rat_int(1));
        assert_eq!(f.num().coeff(1), rat_int(2));
        assert_eq!(f.den().coeff(1), rat_int(-3));
    }

    #[test]
    fn laurent_window_arithmetic() {
        let mut a = LaurentSeries::zero_window(-1, 2);
        a.add_assign_at(-1, rat(1, 2));
        a.add_assign_at(1, rat_int(3));
        let b = LaurentSeries::monomial(1, rat_int(2));
        let prod = a.mul(&b);
        assert_eq!(prod.coeff(0), rat_int(1));
        assert_eq!(prod.coeff(2), rat_int(6));
        assert_eq!(prod.coeff(-5), rat_int(0));
    }
}
