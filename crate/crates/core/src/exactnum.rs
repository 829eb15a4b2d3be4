//! Exact arithmetic over ℚ and a fixed real quadratic extension ℚ(√n).
//!
//! An [`AlgNum`] is `rational_part + surd_part * sqrt(radicand)` with
//! arbitrary-precision rational parts. The radicand is a square-free
//! integer shared by every operand of an operation; `radicand == 0`
//! marks a pure rational. The representation is unique, so equality is
//! component-wise and the sign of any element is decided by integer
//! arithmetic alone.

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Element of ℚ(√n): `rational_part + surd_part·√n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgNum {
    pub rational_part: BigRational,
    pub surd_part: BigRational,
    /// Square-free radicand; 0 means the value is rational.
    pub radicand: u64,
}

/// True if `n` has no repeated prime factor.
pub fn is_square_free(n: u64) -> bool {
    if n < 2 {
        return n == 1;
    }
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

impl AlgNum {
    pub fn zero() -> Self {
        AlgNum { rational_part: BigRational::zero(), surd_part: BigRational::zero(), radicand: 0 }
    }

    pub fn one() -> Self {
        AlgNum { rational_part: BigRational::one(), surd_part: BigRational::zero(), radicand: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        AlgNum::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        AlgNum { rational_part: r, surd_part: BigRational::zero(), radicand: 0 }
    }

    /// `p/q` as a pure rational.
    pub fn rational(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        AlgNum::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// `√n` for a square-free `n ≥ 2`.
    pub fn sqrt(n: u64) -> Result<Self> {
        if n == 0 {
            return Ok(AlgNum::zero());
        }
        if n == 1 {
            return Ok(AlgNum::one());
        }
        if !is_square_free(n) {
            return Err(Error::NotSquareFree(n));
        }
        Ok(AlgNum { rational_part: BigRational::zero(), surd_part: BigRational::one(), radicand: n })
    }

    /// `a + b·√n`; normalizes the radicand away when `b = 0`.
    pub fn new(a: BigRational, b: BigRational, n: u64) -> Result<Self> {
        if n == 1 || (n > 1 && !is_square_free(n)) {
            return Err(Error::NotSquareFree(n));
        }
        if b.is_zero() || n == 0 {
            if !b.is_zero() {
                // b·√0 = 0
                return Ok(AlgNum::from_rational(a));
            }
            return Ok(AlgNum::from_rational(a));
        }
        Ok(AlgNum { rational_part: a, surd_part: b, radicand: n })
    }

    pub fn is_zero(&self) -> bool {
        self.rational_part.is_zero() && self.surd_part.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rational_part.is_one() && self.surd_part.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.surd_part.is_zero()
    }

    /// Rational value when the surd part vanishes.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.surd_part.is_zero() {
            Some(&self.rational_part)
        } else {
            None
        }
    }

    fn normalized(mut self) -> Self {
        if self.surd_part.is_zero() {
            self.radicand = 0;
        }
        self
    }

    /// Radicand shared by `self` and `other`, or an error when both carry
    /// distinct non-trivial surds.
    fn join_radicand(&self, other: &Self) -> Result<u64> {
        match (self.radicand, other.radicand) {
            (a, b) if a == b => Ok(a),
            (0, b) => Ok(b),
            (a, 0) => Ok(a),
            (a, b) => Err(Error::RadicandMismatch(a, b)),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let n = self.join_radicand(other)?;
        Ok(AlgNum {
            rational_part: &self.rational_part + &other.rational_part,
            surd_part: &self.surd_part + &other.surd_part,
            radicand: n,
        }
        .normalized())
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.clone().neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let n = self.join_radicand(other)?;
        let nn = BigRational::from_integer(BigInt::from(n));
        let rational = &self.rational_part * &other.rational_part
            + (&self.surd_part * &other.surd_part) * &nn;
        let surd = &self.rational_part * &other.surd_part + &self.surd_part * &other.rational_part;
        Ok(AlgNum { rational_part: rational, surd_part: surd, radicand: n }.normalized())
    }

    /// Multiplicative inverse via conjugate rationalization:
    /// 1/(a+b√n) = (a−b√n)/(a²−b²n).
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.surd_part.is_zero() {
            return Ok(AlgNum::from_rational(self.rational_part.recip()));
        }
        let nn = BigRational::from_integer(BigInt::from(self.radicand));
        let norm = &self.rational_part * &self.rational_part
            - (&self.surd_part * &self.surd_part) * &nn;
        // a² = b²n with b ≠ 0 would make √n rational; impossible for a
        // square-free radicand ≥ 2.
        debug_assert!(!norm.is_zero());
        Ok(AlgNum {
            rational_part: &self.rational_part / &norm,
            surd_part: -(&self.surd_part / &norm),
            radicand: self.radicand,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inverse()?)
    }

    /// Exact sign in {−1, 0, +1}, decided by integer arithmetic.
    pub fn sign(&self) -> i32 {
        let a = &self.rational_part;
        let b = &self.surd_part;
        if b.is_zero() {
            return sign_of(a);
        }
        if a.is_zero() {
            return sign_of(b);
        }
        let sa = sign_of(a);
        let sb = sign_of(b);
        if sa == sb {
            return sa;
        }
        // Opposite signs: compare a² with b²·n.
        let nn = BigRational::from_integer(BigInt::from(self.radicand));
        let lhs = a * a;
        let rhs = b * b * nn;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            self.clone().neg()
        } else {
            self.clone()
        }
    }

    /// Galois conjugate a − b√n.
    pub fn conjugate(&self) -> Self {
        AlgNum {
            rational_part: self.rational_part.clone(),
            surd_part: -self.surd_part.clone(),
            radicand: self.radicand,
        }
        .normalized()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = AlgNum::one();
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("compatible radicands");
        }
        acc
    }

    /// Exact comparison through sign of the difference.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        match self.checked_sub(other).expect("compatible radicands").sign() {
            s if s > 0 => Ordering::Greater,
            s if s < 0 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }

    /// Lower and upper f64 bounds with outward rounding, exact-checked.
    pub fn to_f64_bounds(&self) -> (f64, f64) {
        let (rlo, rhi) = rational_f64_bounds(&self.rational_part);
        if self.surd_part.is_zero() {
            return (rlo, rhi);
        }
        let (slo, shi) = sqrt_f64_bounds(self.radicand);
        let (blo, bhi) = rational_f64_bounds(&self.surd_part);
        // surd_part * sqrt(n), outward.
        let cands = [blo * slo, blo * shi, bhi * slo, bhi * shi];
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for c in cands {
            lo = lo.min(c);
            hi = hi.max(c);
        }
        (next_down(rlo + lo), next_up(rhi + hi))
    }

    /// Nearest-effort f64 value (midpoint of the certified bounds).
    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.to_f64_bounds();
        0.5 * (lo + hi)
    }
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub(crate) fn next_up(x: f64) -> f64 {
    if x.is_nan() || x == f64::INFINITY {
        return x;
    }
    let bits = if x == 0.0 { 1 } else if x > 0.0 { x.to_bits() + 1 } else { x.to_bits() - 1 };
    f64::from_bits(bits)
}

pub(crate) fn next_down(x: f64) -> f64 {
    -next_up(-x)
}

/// Certified f64 enclosure of a rational, verified by exact comparison.
pub(crate) fn rational_f64_bounds(r: &BigRational) -> (f64, f64) {
    let approx = r.to_f64().unwrap_or(0.0);
    if !approx.is_finite() {
        return if approx > 0.0 { (f64::MAX, f64::INFINITY) } else { (f64::NEG_INFINITY, f64::MIN) };
    }
    let mut lo = approx;
    let mut hi = approx;
    // Nudge until the bounds provably bracket the exact value.
    for _ in 0..4 {
        if f64_le_rational(lo, r) {
            break;
        }
        lo = next_down(lo);
    }
    while !f64_le_rational(lo, r) {
        lo = next_down(lo);
    }
    for _ in 0..4 {
        if rational_le_f64(r, hi) {
            break;
        }
        hi = next_up(hi);
    }
    while !rational_le_f64(r, hi) {
        hi = next_up(hi);
    }
    (lo, hi)
}

fn f64_le_rational(x: f64, r: &BigRational) -> bool {
    if x == f64::NEG_INFINITY {
        return true;
    }
    match BigRational::from_float(x) {
        Some(xr) => xr <= *r,
        None => false,
    }
}

fn rational_le_f64(r: &BigRational, x: f64) -> bool {
    if x == f64::INFINITY {
        return true;
    }
    match BigRational::from_float(x) {
        Some(xr) => *r <= xr,
        None => false,
    }
}

/// Certified f64 enclosure of √n, verified by exact integer comparison.
fn sqrt_f64_bounds(n: u64) -> (f64, f64) {
    let approx = (n as f64).sqrt();
    let mut lo = approx;
    let mut hi = approx;
    let nr = BigRational::from_integer(BigInt::from(n));
    let le_sqrt = |x: f64| -> bool {
        if x <= 0.0 {
            return true;
        }
        match BigRational::from_float(x) {
            Some(xr) => &xr * &xr <= nr,
            None => false,
        }
    };
    let ge_sqrt = |x: f64| -> bool {
        if x <= 0.0 {
            return false;
        }
        match BigRational::from_float(x) {
            Some(xr) => &xr * &xr >= nr,
            None => x == f64::INFINITY,
        }
    };
    while !le_sqrt(lo) {
        lo = next_down(lo);
    }
    while !ge_sqrt(hi) {
        hi = next_up(hi);
    }
    (lo, hi)
}

impl Neg for AlgNum {
    type Output = AlgNum;
    fn neg(self) -> AlgNum {
        AlgNum {
            rational_part: -self.rational_part,
            surd_part: -self.surd_part,
            radicand: self.radicand,
        }
        .normalized()
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &AlgNum {
            type Output = AlgNum;
            fn $method(self, rhs: &AlgNum) -> AlgNum {
                self.$checked(rhs).expect("AlgNum arithmetic")
            }
        }
        impl $trait for AlgNum {
            type Output = AlgNum;
            fn $method(self, rhs: AlgNum) -> AlgNum {
                (&self).$checked(&rhs).expect("AlgNum arithmetic")
            }
        }
    };
}

impl_binop!(Add, add, checked_add);
impl_binop!(Sub, sub, checked_sub);
impl_binop!(Mul, mul, checked_mul);
impl_binop!(Div, div, checked_div);

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for AlgNum {
    /// Canonical form `a + b*sqrt(n)`; pure parts are elided, unit surd
    /// coefficients print as `sqrt(n)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd_part.is_zero() {
            return write!(f, "{}", fmt_rational(&self.rational_part));
        }
        let surd = |b: &BigRational| -> String {
            if b.is_one() {
                format!("sqrt({})", self.radicand)
            } else {
                format!("{}*sqrt({})", fmt_rational(b), self.radicand)
            }
        };
        if self.rational_part.is_zero() {
            if self.surd_part.is_negative() {
                let b = -self.surd_part.clone();
                return write!(f, "-{}", surd(&b));
            }
            return write!(f, "{}", surd(&self.surd_part));
        }
        if self.surd_part.is_negative() {
            let b = -self.surd_part.clone();
            write!(f, "{} - {}", fmt_rational(&self.rational_part), surd(&b))
        } else {
            write!(f, "{} + {}", fmt_rational(&self.rational_part), surd(&self.surd_part))
        }
    }
}

impl fmt::Debug for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Rational content (gcd of numerators over lcm of denominators) of a
/// non-empty list of rationals; positive by convention.
pub(crate) fn rational_content(values: &[BigRational]) -> BigRational {
    use num_integer::Integer;
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for v in values {
        if v.is_zero() {
            continue;
        }
        num_gcd = num_gcd.gcd(v.numer());
        den_lcm = den_lcm.lcm(v.denom());
    }
    if num_gcd.is_zero() {
        return BigRational::one();
    }
    BigRational::new(num_gcd, den_lcm)
}

/// Positive rational content of a list of AlgNums (rational and surd
/// coefficients pooled together).
pub(crate) fn algnum_content(values: &[AlgNum]) -> BigRational {
    let mut parts = Vec::new();
    for v in values {
        if !v.rational_part.is_zero() {
            parts.push(v.rational_part.clone());
        }
        if !v.surd_part.is_zero() {
            parts.push(v.surd_part.clone());
        }
    }
    if parts.is_empty() {
        BigRational::one()
    } else {
        rational_content(&parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, q_: i64) -> AlgNum {
        AlgNum::rational(p, q_)
    }

    #[test]
    fn rational_addition() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
    }

    #[test]
    fn surd_square() {
        let s = AlgNum::sqrt(2).unwrap();
        assert_eq!(s.clone() * s, AlgNum::from_int(2));
    }

    #[test]
    fn conjugate_rationalization() {
        // 1/(1+√2) = −1+√2
        let x = q(1, 1) + AlgNum::sqrt(2).unwrap();
        let inv = x.inverse().unwrap();
        let expected = AlgNum::new(
            BigRational::from_integer(BigInt::from(-1)),
            BigRational::one(),
            2,
        )
        .unwrap();
        assert_eq!(inv, expected);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(AlgNum::zero().sign(), 0);
        // sign(√2 − 7/5) = +1 since 2·25 > 49
        let x = AlgNum::sqrt(2).unwrap() - q(7, 5);
        assert_eq!(x.sign(), 1);
        // sign(1 − √2) = −1 since 1 < 2
        let y = q(1, 1) - AlgNum::sqrt(2).unwrap();
        assert_eq!(y.sign(), -1);
    }

    #[test]
    fn radicand_mismatch_rejected() {
        let a = AlgNum::sqrt(2).unwrap();
        let b = AlgNum::sqrt(3).unwrap();
        assert!(a.checked_add(&b).is_err());
    }

    #[test]
    fn rational_mixes_with_any_radicand() {
        let a = AlgNum::sqrt(5).unwrap();
        let b = q(3, 1);
        let c = a.checked_add(&b).unwrap();
        assert_eq!(c.radicand, 5);
        assert_eq!(c.rational_part, BigRational::from_integer(BigInt::from(3)));
    }

    #[test]
    fn square_free_detection() {
        assert!(is_square_free(2));
        assert!(is_square_free(30));
        assert!(!is_square_free(4));
        assert!(!is_square_free(12));
        assert!(AlgNum::sqrt(8).is_err());
    }

    #[test]
    fn f64_bounds_bracket() {
        let x = q(1, 3) + AlgNum::sqrt(2).unwrap() * q(7, 5);
        let (lo, hi) = x.to_f64_bounds();
        let approx = 1.0 / 3.0 + 1.4 * std::f64::consts::SQRT_2;
        assert!(lo <= approx && approx <= hi);
        assert!(hi - lo < 1e-12);
    }

    #[test]
    fn display_canonical() {
        assert_eq!(q(5, 6).to_string(), "5/6");
        let x = q(-1, 1) + AlgNum::sqrt(2).unwrap();
        assert_eq!(x.to_string(), "-1 + sqrt(2)");
        let y = q(0, 1) - AlgNum::sqrt(3).unwrap() * q(2, 1);
        assert_eq!(y.to_string(), "-2*sqrt(3)");
    }
}
