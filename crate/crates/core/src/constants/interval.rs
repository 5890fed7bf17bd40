//! Closed intervals with exact rational endpoints.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, Zero};

/// Default precision (bits) of the dyadic grid used for outward rounding.
pub const DEFAULT_BITS: u32 = 256;

/// `[lo, hi]` with `lo <= hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    /// Exact conversion of finite floats, `lo <= hi`.
    pub fn from_f64(lo: f64, hi: f64) -> Self {
        Self::new(
            BigRational::from_f64(lo).expect("finite lower endpoint"),
            BigRational::from_f64(hi).expect("finite upper endpoint"),
        )
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        to_f64(&((&self.lo + &self.hi) / BigRational::from_integer(2.into())))
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// `other ⊆ self`.
    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Product of two intervals contained in `[0, ∞)`.
    pub fn mul_nonneg(&self, other: &Interval) -> Interval {
        debug_assert!(!self.lo.is_negative() && !other.lo.is_negative());
        Interval::new(&self.lo * &other.lo, &self.hi * &other.hi)
    }

    /// Multiplication by a nonnegative scalar.
    pub fn scale(&self, r: &BigRational) -> Interval {
        debug_assert!(!r.is_negative());
        Interval::new(&self.lo * r, &self.hi * r)
    }

    /// Smallest interval with endpoints on the grid `2^-bits Z` containing `self`.
    pub fn round_outward(&self, bits: u32) -> Interval {
        Interval::new(floor_dyadic(&self.lo, bits), ceil_dyadic(&self.hi, bits))
    }

    pub fn lo_decimal(&self, digits: usize) -> String {
        decimal_floor(&self.lo, digits)
    }

    pub fn hi_decimal(&self, digits: usize) -> String {
        decimal_ceil(&self.hi, digits)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo_decimal(12), self.hi_decimal(12))
    }
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

pub fn floor_dyadic(x: &BigRational, bits: u32) -> BigRational {
    let s = pow2(bits);
    BigRational::new((x.numer() * &s).div_floor(x.denom()), s)
}

pub fn ceil_dyadic(x: &BigRational, bits: u32) -> BigRational {
    let s = pow2(bits);
    BigRational::new(-((-(x.numer() * &s)).div_floor(x.denom())), s)
}

fn format_scaled(n: BigInt, digits: usize) -> String {
    let neg = n.is_negative();
    let s = n.abs().to_string();
    let s = if s.len() <= digits { format!("{}{}", "0".repeat(digits + 1 - s.len()), s) } else { s };
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Largest decimal with `digits` fractional digits that is `<= x`.
pub fn decimal_floor(x: &BigRational, digits: usize) -> String {
    let s = BigInt::from(10).pow(digits as u32);
    format_scaled((x.numer() * s).div_floor(x.denom()), digits)
}

/// Smallest decimal with `digits` fractional digits that is `>= x`.
pub fn decimal_ceil(x: &BigRational, digits: usize) -> String {
    let s = BigInt::from(10).pow(digits as u32);
    format_scaled(-((-(x.numer() * s)).div_floor(x.denom())), digits)
}

/// Parses a plain decimal string exactly.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    let r = BigRational::new(n, BigInt::from(10).pow(frac.len() as u32));
    Some(if neg { -r } else { r })
}

/// Nearest-ish float; intended for reporting only.
pub fn to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn decimals_round_outward() {
        assert_eq!(decimal_floor(&r(1, 3), 4), "0.3333");
        assert_eq!(decimal_ceil(&r(1, 3), 4), "0.3334");
        assert_eq!(decimal_floor(&r(-1, 3), 2), "-0.34");
        assert_eq!(decimal_ceil(&r(-1, 3), 2), "-0.33");
        assert_eq!(decimal_floor(&r(17, 576), 6), "0.029513");
        assert_eq!(decimal_ceil(&r(5, 1), 3), "5.000");
        assert_eq!(parse_decimal("0.029513"), Some(r(29513, 1_000_000)));
        assert_eq!(parse_decimal("-2.5"), Some(r(-5, 2)));
        assert_eq!(parse_decimal("x1"), None);
    }

    #[test]
    fn dyadic_rounding_encloses() {
        let x = Interval::new(r(1, 3), r(2, 3));
        let y = x.round_outward(10);
        assert!(y.contains_interval(&x));
        assert!(y.width() < x.width() + r(2, 1024) + r(1, 1_000_000));
    }
}
