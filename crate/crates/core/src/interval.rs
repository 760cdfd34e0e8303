//! Closed intervals with exact rational endpoints and outward dyadic rounding.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::factorial;

/// Default working precision in bits; a little over 50 decimal digits.
pub const DEFAULT_PRECISION: u32 = 170;

#[derive(Clone, PartialEq, Eq)]
pub struct IntervalRational {
    lo: BigRational,
    hi: BigRational,
}

fn bit_len(x: &BigInt) -> i64 {
    x.bits() as i64
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// Largest dyadic with `bits` significant bits that is `≤ x` (or `≥ x` when `up`).
pub fn round_dyadic(x: &BigRational, bits: u32, up: bool) -> BigRational {
    if x.is_zero() {
        return x.clone();
    }
    let num = x.numer();
    let den = x.denom();
    let exp = bit_len(num) - bit_len(den);
    let s = bits as i64 - exp;
    let (scaled_num, scaled_den) = if s >= 0 {
        (num << s as u64, den.clone())
    } else {
        (num.clone(), den << (-s) as u64)
    };
    let q = if up {
        Integer::div_ceil(&scaled_num, &scaled_den)
    } else {
        Integer::div_floor(&scaled_num, &scaled_den)
    };
    if s >= 0 {
        BigRational::new(q, pow2(s as u64))
    } else {
        BigRational::from_integer(q << (-s) as u64)
    }
}

impl IntervalRational {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "empty interval");
        IntervalRational { lo, hi }
    }

    pub fn exact(x: BigRational) -> Self {
        IntervalRational { lo: x.clone(), hi: x }
    }

    pub fn from_integer(x: BigInt) -> Self {
        Self::exact(BigRational::from_integer(x))
    }

    pub fn from_biguint(x: &BigUint) -> Self {
        Self::from_integer(BigInt::from_biguint(Sign::Plus, x.clone()))
    }

    pub fn from_i64(x: i64) -> Self {
        Self::from_integer(BigInt::from(x))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Self::exact(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Every point of `self` is strictly below every point of `other`.
    pub fn certainly_lt(&self, other: &IntervalRational) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_le(&self, other: &IntervalRational) -> bool {
        self.hi <= other.lo
    }

    /// Widen outward to dyadic endpoints of `bits` significant bits.
    pub fn round(&self, bits: u32) -> Self {
        IntervalRational { lo: round_dyadic(&self.lo, bits, false), hi: round_dyadic(&self.hi, bits, true) }
    }

    pub fn add(&self, o: &Self) -> Self {
        IntervalRational { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Self) -> Self {
        IntervalRational { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn neg(&self) -> Self {
        IntervalRational { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if !self.lo.is_negative() && !o.lo.is_negative() {
            return IntervalRational { lo: &self.lo * &o.lo, hi: &self.hi * &o.hi };
        }
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        IntervalRational { lo, hi }
    }

    /// Panics when `self` contains zero.
    pub fn recip(&self) -> Self {
        assert!(self.lo.is_positive() || self.hi.is_negative(), "reciprocal of an interval containing 0");
        IntervalRational { lo: self.hi.recip(), hi: self.lo.recip() }
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.recip())
    }

    pub fn scale(&self, x: &BigRational) -> Self {
        self.mul(&Self::exact(x.clone()))
    }

    pub fn powi(&self, e: u32) -> Self {
        if e == 0 {
            return Self::exact(BigRational::one());
        }
        let plo = num_traits::pow(self.lo.clone(), e as usize);
        let phi = num_traits::pow(self.hi.clone(), e as usize);
        if e % 2 == 1 || !self.lo.is_negative() {
            IntervalRational { lo: plo, hi: phi }
        } else if !self.hi.is_positive() {
            IntervalRational { lo: phi, hi: plo }
        } else {
            IntervalRational { lo: BigRational::zero(), hi: plo.max(phi) }
        }
    }

    /// Power with outward rounding after every multiplication; for nonnegative intervals.
    pub fn powi_rounded(&self, e: u64, bits: u32) -> Self {
        assert!(!self.lo.is_negative(), "powi_rounded needs a nonnegative base");
        let mut result = Self::exact(BigRational::one());
        let mut base = self.round(bits);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).round(bits);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).round(bits);
            }
        }
        result
    }

    /// Enclosure of the `k`-th root of a nonnegative interval.
    pub fn nth_root(&self, k: u32, bits: u32) -> Self {
        assert!(!self.lo.is_negative(), "root of a negative interval");
        IntervalRational { lo: root_bound(&self.lo, k, bits, false), hi: root_bound(&self.hi, k, bits, true) }
    }

    pub fn sqrt(&self, bits: u32) -> Self {
        self.nth_root(2, bits)
    }

    pub fn midpoint_f64(&self) -> f64 {
        rational_to_f64(&((&self.lo + &self.hi) / BigInt::from(2)))
    }

    /// `[lo, hi]` with each endpoint printed to `digits` significant decimals, rounded outward.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        format!("[{}, {}]", decimal(&self.lo, digits, false), decimal(&self.hi, digits, true))
    }

    /// Compares against a rational, if the answer is certain.
    pub fn cmp_rational(&self, x: &BigRational) -> Option<Ordering> {
        if &self.hi < x {
            Some(Ordering::Less)
        } else if &self.lo > x {
            Some(Ordering::Greater)
        } else if self.is_exact() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

impl fmt::Debug for IntervalRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string(20))
    }
}

impl fmt::Display for IntervalRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string(20))
    }
}

fn root_bound(x: &BigRational, k: u32, bits: u32, up: bool) -> BigRational {
    if x.is_zero() {
        return x.clone();
    }
    let num = x.numer();
    let den = x.denom();
    let e = bit_len(num) - bit_len(den);
    let s = (bits as i64 + 2 - e / k as i64).max(0) as u64;
    let scaled_num = num << (s * k as u64);
    let q = if up { Integer::div_ceil(&scaled_num, den) } else { Integer::div_floor(&scaled_num, den) };
    let q = q.to_biguint().expect("nonnegative");
    let mut r = q.nth_root(k);
    if up && num_traits::pow(r.clone(), k as usize) != q {
        r += 1u32;
    }
    BigRational::new(BigInt::from_biguint(Sign::Plus, r), pow2(s))
}

/// Nearest `f64` (truncated), for display only.
pub fn rational_to_f64(x: &BigRational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let num = x.numer();
    let den = x.denom();
    let shift = 64 - (bit_len(num) - bit_len(den));
    let q = if shift >= 0 { (num << shift as u64) / den } else { num / (den << (-shift) as u64) };
    let m = q.to_f64().unwrap_or(f64::NAN);
    m * libm_exp2(-shift)
}

fn libm_exp2(e: i64) -> f64 {
    let mut r = 1.0f64;
    let step = if e >= 0 { 2.0 } else { 0.5 };
    for _ in 0..e.unsigned_abs() {
        r *= step;
        if r == 0.0 || r.is_infinite() {
            break;
        }
    }
    r
}

/// Scientific notation with `digits` significant digits, rounded down or up.
pub fn decimal(x: &BigRational, digits: usize, up: bool) -> String {
    if x.is_zero() {
        return String::from("0");
    }
    let neg = x.is_negative();
    let a = x.abs();
    // Round the magnitude toward the requested side of the signed value.
    let mag_up = up != neg;
    let mut exp10: i64 = (a.numer().to_string().len() as i64) - (a.denom().to_string().len() as i64);
    let ten = BigInt::from(10);
    let scaled = |e: i64| -> BigRational {
        let sh = digits as i64 - 1 - e;
        if sh >= 0 {
            &a * BigRational::from_integer(num_traits::pow(ten.clone(), sh as usize))
        } else {
            &a / BigRational::from_integer(num_traits::pow(ten.clone(), (-sh) as usize))
        }
    };
    let lower = BigRational::from_integer(num_traits::pow(ten.clone(), digits - 1));
    let upper = BigRational::from_integer(num_traits::pow(ten.clone(), digits));
    let mut v = scaled(exp10);
    while v >= upper {
        exp10 += 1;
        v = scaled(exp10);
    }
    while v < lower {
        exp10 -= 1;
        v = scaled(exp10);
    }
    let mut q = if mag_up { v.ceil().to_integer() } else { v.floor().to_integer() };
    if BigRational::from_integer(q.clone()) >= upper {
        q /= 10;
        exp10 += 1;
    }
    let s = q.to_string();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&s[..1]);
    if s.len() > 1 {
        out.push('.');
        out.push_str(&s[1..]);
    }
    out.push_str(&format!("e{}", exp10));
    out
}

/// Enclosure of e from the series with remainder `< 1/(N!·N)`.
pub fn e_enclosure(bits: u32) -> IntervalRational {
    let target = BigUint::one() << (bits as u64 + 4);
    let mut n = 2usize;
    while factorial(n) * n < target {
        n += 1;
    }
    let mut sum = BigRational::zero();
    let mut fact = BigInt::one();
    for j in 0..=n {
        if j > 0 {
            fact *= j;
        }
        sum += BigRational::new(BigInt::one(), fact.clone());
    }
    let tail = BigRational::new(BigInt::one(), fact * BigInt::from(n));
    IntervalRational::new(sum.clone(), sum + tail).round(bits)
}

fn arctan_inv(x: i64, bits: u32) -> IntervalRational {
    // Alternating series with decreasing terms: the partial sum is within one term.
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let target = BigInt::one() << (bits as u64 + 8);
    let mut pow = x.clone();
    let mut sum = BigRational::zero();
    let mut k: i64 = 0;
    loop {
        let term = BigRational::new(BigInt::one(), &pow * BigInt::from(2 * k + 1));
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        pow *= &x2;
        k += 1;
        if &pow * BigInt::from(2 * k + 1) > target {
            let next = BigRational::new(BigInt::one(), &pow * BigInt::from(2 * k + 1));
            return IntervalRational::new(&sum - &next, &sum + &next);
        }
    }
}

/// Enclosure of π by Machin's formula.
pub fn pi_enclosure(bits: u32) -> IntervalRational {
    let a = arctan_inv(5, bits + 8);
    let b = arctan_inv(239, bits + 8);
    a.scale(&BigRational::from_integer(BigInt::from(16)))
        .sub(&b.scale(&BigRational::from_integer(BigInt::from(4))))
        .round(bits)
}

/// Shorthand used by tests and reports.
pub fn big(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Exact rational from a `BigUint` quotient.
pub fn ratio_big(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(
        BigInt::from_biguint(Sign::Plus, num.clone()),
        BigInt::from_biguint(Sign::Plus, den.clone()),
    )
}

pub fn rational_from_biguint(x: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from_biguint(Sign::Plus, x.clone()))
}

/// Decimal expansions of a list of intervals, for logs.
pub fn describe(values: &[(&str, &IntervalRational)]) -> Vec<String> {
    values.iter().map(|(k, v)| format!("{} = {}", k, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn rounding_is_outward() {
        let x = r(1, 3);
        for bits in [1, 5, 30, 100] {
            let lo = round_dyadic(&x, bits, false);
            let hi = round_dyadic(&x, bits, true);
            assert!(lo <= x && x <= hi);
            assert!(&hi - &lo <= BigRational::new(BigInt::one(), pow2(bits as u64 - 1)));
        }
        let y = r(-7, 5);
        assert!(round_dyadic(&y, 10, false) <= y);
        assert!(round_dyadic(&y, 10, true) >= y);
    }

    #[test]
    fn e_is_bracketed() {
        let e = e_enclosure(DEFAULT_PRECISION);
        // 2.718281828459045235360287 and ...236 bracket e.
        assert!(e.lo() > &r(2718281828459045235, 1_000_000_000_000_000_000));
        assert!(e.hi() < &r(2718281828459045236, 1_000_000_000_000_000_000));
        assert!(e.width() < BigRational::new(BigInt::one(), pow2(160)));
    }

    #[test]
    fn pi_is_bracketed() {
        let p = pi_enclosure(DEFAULT_PRECISION);
        assert!(p.lo() > &r(3141592653589793238, 1_000_000_000_000_000_000));
        assert!(p.hi() < &r(3141592653589793239, 1_000_000_000_000_000_000));
        let d = pi_enclosure(2 * DEFAULT_PRECISION);
        assert!(p.lo() <= d.lo() && d.hi() <= p.hi());
    }

    #[test]
    fn roots_enclose() {
        let two = IntervalRational::from_i64(2);
        let s = two.sqrt(100);
        assert!(s.powi(2).contains(&big(2)));
        let c = IntervalRational::from_i64(4).nth_root(3, 100);
        assert!(c.powi(3).contains(&big(4)));
        let q = IntervalRational::exact(r(1, 9)).sqrt(60);
        assert!(q.contains(&r(1, 3)));
    }

    #[test]
    fn arithmetic_signs() {
        let a = IntervalRational::new(r(-1, 1), r(2, 1));
        let b = IntervalRational::new(r(-3, 1), r(1, 1));
        let p = a.mul(&b);
        assert_eq!(p.lo(), &r(-6, 1));
        assert_eq!(p.hi(), &r(3, 1));
        assert_eq!(a.powi(2).lo(), &r(0, 1));
        assert_eq!(a.powi(2).hi(), &r(4, 1));
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal(&r(1, 3), 4, false), "3.333e-1");
        assert_eq!(decimal(&r(1, 3), 4, true), "3.334e-1");
        assert_eq!(decimal(&r(9999, 1), 2, true), "1.0e4");
        assert_eq!(decimal(&r(-1, 3), 2, false), "-3.4e-1");
    }

    #[test]
    fn rounded_powers_enclose_exact() {
        let x = IntervalRational::exact(r(7, 9));
        let exact = x.powi(37);
        let rounded = x.powi_rounded(37, 40);
        assert!(rounded.lo() <= exact.lo() && exact.hi() <= rounded.hi());
    }
}
