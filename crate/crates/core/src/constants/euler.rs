//! The finite part of the leading constant:
//! `prod_p (1 - 1/p)^4 (1 + 4/p)`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::interval::{Interval, DEFAULT_BITS};
use crate::arith::{is_prime, primes_up_to};
use crate::error::{Error, Result};

/// Exponent of `(1 - 1/p)` in the local factor.
pub const LOCAL_EXPONENT: u32 = 4;

/// Smallest admissible cutoff. For `p >= 11` the local factor satisfies
/// `1 > f(p) >= 1 - 10/p²` and `|log f(p)| <= 10/(p² - 10) <= 11/p²`.
pub const MIN_CUTOFF: u64 = 11;

/// `(1 - 1/p)^4 (1 + 4/p)`.
pub fn euler_local_factor(p: u64) -> Result<BigRational> {
    local_factor_with_exponent(p, LOCAL_EXPONENT)
}

/// `(1 - 1/p)^e (1 + 4/p)`; [`euler_local_factor`] with a chosen exponent.
pub fn local_factor_with_exponent(p: u64, e: u32) -> Result<BigRational> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p = BigInt::from(p);
    let num = (&p - 1u32).pow(e) * (&p + 4u32);
    let den = p.pow(e + 1);
    Ok(BigRational::new(num, den))
}

fn product_tree(mut v: Vec<BigUint>) -> BigUint {
    if v.is_empty() {
        return BigUint::one();
    }
    while v.len() > 1 {
        v = v
            .chunks(2)
            .map(|c| if c.len() == 2 { &c[0] * &c[1] } else { c[0].clone() })
            .collect();
    }
    v.pop().unwrap()
}

/// Numerator and denominator of `prod_{p <= cutoff} f(p)` (not reduced).
fn partial_product_parts(cutoff: u64) -> (BigUint, BigUint) {
    let primes = primes_up_to(cutoff);
    let nums = primes
        .iter()
        .map(|&p| {
            let p = p as u128;
            BigUint::from((p - 1).pow(4) * (p + 4))
        })
        .collect();
    let dens = primes.iter().map(|&p| BigUint::from((p as u128).pow(5))).collect();
    (product_tree(nums), product_tree(dens))
}

/// `prod_{p <= cutoff} f(p)` as an exact reduced fraction. Intended for
/// small cutoffs; [`euler_product`] avoids reducing huge fractions.
pub fn euler_partial_product(cutoff: u64) -> BigRational {
    let (n, d) = partial_product_parts(cutoff);
    BigRational::new(n.into(), d.into())
}

/// Enclosure of the full product: the exact partial product over
/// `p <= cutoff`, rounded outward to a 2^-256 grid, times the tail
/// enclosure `[1 - 11/cutoff, 1]`. The tail bound follows from
/// `sum_{n > P} 11/n² <= 11/P` and `exp(-u) >= 1 - u`.
pub fn euler_product(cutoff: u64) -> Result<Interval> {
    if cutoff < MIN_CUTOFF {
        return Err(Error::CutoffTooSmall(cutoff));
    }
    let (n, d) = partial_product_parts(cutoff);
    let scaled = BigInt::from(n) << DEFAULT_BITS;
    let d = BigInt::from(d);
    let (q, r) = scaled.div_rem(&d);
    let s = BigInt::one() << DEFAULT_BITS;
    let lo = BigRational::new(q.clone(), s.clone());
    let hi = if r == BigInt::from(0) { lo.clone() } else { BigRational::new(q + 1, s) };
    let tail = BigRational::new(BigInt::from(cutoff - 11), BigInt::from(cutoff));
    Ok(Interval::new(lo * tail, hi).round_outward(DEFAULT_BITS))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn local_factors() {
        assert_eq!(euler_local_factor(2).unwrap(), r(3, 16));
        assert_eq!(euler_local_factor(3).unwrap(), r(112, 243));
        assert_eq!(euler_local_factor(5).unwrap(), r(2304, 3125));
        assert_eq!(euler_local_factor(4), Err(Error::NotPrime(4)));
        // Expanded form 1 - 10/p² + 20/p³ - 15/p⁴ + 4/p⁵.
        for p in [2u64, 3, 5, 7, 11, 101] {
            let q = BigRational::from_integer(p.into());
            let one = BigRational::one();
            let expanded = &one - r(10, 1) / (&q * &q) + r(20, 1) / q.pow(3) - r(15, 1) / q.pow(4) + r(4, 1) / q.pow(5);
            assert_eq!(euler_local_factor(p).unwrap(), expanded);
        }
    }

    #[test]
    fn partial_products() {
        assert_eq!(euler_partial_product(3), r(3, 16) * r(112, 243));
        assert_eq!(euler_product(7), Err(Error::CutoffTooSmall(7)));
    }

    #[test]
    fn tail_bound_holds_numerically() {
        // The analytic argument needs p >= 11; numerically the bound holds for all p.
        for p in primes_up_to(100_000) {
            let x = p as f64;
            let f = (1.0 - 1.0 / x).powi(4) * (1.0 + 4.0 / x);
            assert!(f < 1.0 && -f.ln() <= 11.0 / (x * x), "p = {p}");
        }
    }

    #[test]
    fn enclosures_nest() {
        let a = euler_product(100).unwrap();
        let b = euler_product(1000).unwrap();
        let c = euler_product(10_000).unwrap();
        assert!(a.contains_interval(&b) && b.contains_interval(&c));
        assert!(c.width() < b.width() && b.width() < a.width());
        let exact = euler_partial_product(1000);
        assert!(b.hi >= exact && b.lo <= exact);
    }
}
