//! Point counts of the surface and of the open part over F_p, obtained from
//! the universal torsor.

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::torsor::COPRIMALITY_SCHEMA;

use super::euler::local_factor_with_exponent;
use num_rational::BigRational;

/// Largest prime accepted by [`ff_surface_count`].
pub const MAX_PRIME: u64 = 97;

/// Largest prime accepted by [`ff_surface_count_naive`].
pub const MAX_NAIVE_PRIME: u64 = 5;

/// Point counts `(#X(F_p), #U(F_p))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FfCount {
    pub surface: u64,
    pub open: u64,
}

fn mul(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn inv(a: u64, p: u64) -> u64 {
    let mut r = 1;
    let (mut b, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, b, p);
        }
        b = mul(b, b, p);
        e >>= 1;
    }
    r
}

/// Tuple in the torsor over F_p: the five equations hold and no pair in the
/// coprimality schema vanishes simultaneously.
fn on_torsor(a: &[u64; 10], p: u64) -> bool {
    let [a1, a2, a3, a4, a12, a13, a14, a23, a24, a34] = *a;
    let m = |x: u64, y: u64| x * y % p;
    let eqs = [
        (m(a4, a14) + m(a2, a12), m(a3, a13)),
        (m(a4, a24) + m(a1, a12), m(a3, a23)),
        (m(a4, a34) + m(a1, a13), m(a2, a23)),
        (m(a3, a34) + m(a1, a14), m(a2, a24)),
        (m(a12, a34) + m(a23, a14), m(a13, a24)),
    ];
    eqs.iter().all(|(l, r)| l % p == *r) && COPRIMALITY_SCHEMA.iter().all(|&(i, j)| a[i] != 0 || a[j] != 0)
}

fn check_prime(p: u64, max: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p > max {
        return Err(Error::PrimeOutOfRange(p));
    }
    Ok(())
}

fn quotient(torsor: u64, open: u64, p: u64) -> Result<FfCount> {
    let g = (p - 1).pow(5);
    if torsor % g != 0 || open % g != 0 {
        return Err(Error::Internal(format!("torsor count over F_{p} not divisible by (p-1)^5")));
    }
    Ok(FfCount { surface: torsor / g, open: open / g })
}

/// `#X(F_p)` and `#U(F_p)` by counting torsor points and dividing by the
/// order `(p-1)^5` of the torus. For each `(a1..a4)` the first four
/// equations are linear in the other six coordinates; their solution space
/// is enumerated and the last equation checked.
pub fn ff_surface_count(p: u64) -> Result<FfCount> {
    check_prime(p, MAX_PRIME)?;
    let (mut torsor, mut open) = (0u64, 0u64);
    let neg = |x: u64| (p - x % p) % p;
    for idx in 0..p.pow(4) {
        let ap = [idx % p, idx / p % p, idx / p.pow(2) % p, idx / p.pow(3)];
        let [a1, a2, a3, a4] = ap;
        // Columns: a12, a13, a14, a23, a24, a34.
        let mut rows = [
            [a2, neg(a3), a4, 0, 0, 0],
            [a1, 0, 0, neg(a3), a4, 0],
            [0, a1, 0, neg(a2), 0, a4],
            [0, 0, a1, 0, neg(a2), a3],
        ];
        let pivots = rref(&mut rows, p);
        let free: Vec<usize> = (0..6).filter(|c| !pivots.contains(c)).collect();
        for k in 0..p.pow(free.len() as u32) {
            let mut v = [0u64; 6];
            let mut kk = k;
            for &c in &free {
                v[c] = kk % p;
                kk /= p;
            }
            for (r, &pc) in pivots.iter().enumerate() {
                let s = free.iter().map(|&c| rows[r][c] * v[c]).sum::<u64>() % p;
                v[pc] = neg(s);
            }
            let a = [a1, a2, a3, a4, v[0], v[1], v[2], v[3], v[4], v[5]];
            if on_torsor(&a, p) {
                torsor += 1;
                if a[4] != 0 {
                    open += 1;
                }
            }
        }
    }
    quotient(torsor, open, p)
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(rows: &mut [[u64; 6]; 4], p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..6 {
        if r == rows.len() {
            break;
        }
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else { continue };
        rows.swap(r, k);
        let s = inv(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = mul(*x, s, p);
        }
        let pivot = rows[r];
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p * p - mul(f, y, p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Same counts by brute force over all of `F_p^10`; an oracle for tiny `p`.
pub fn ff_surface_count_naive(p: u64) -> Result<FfCount> {
    check_prime(p, MAX_NAIVE_PRIME)?;
    let (mut torsor, mut open) = (0u64, 0u64);
    let mut a = [0u64; 10];
    loop {
        if on_torsor(&a, p) {
            torsor += 1;
            if a[4] != 0 {
                open += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == 10 {
                return quotient(torsor, open, p);
            }
            a[i] += 1;
            if a[i] < p {
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

/// Checks that the local factor equals `(1 - 1/p)^4 #U(F_p) / p²`.
pub fn padic_density_check(p: u64) -> Result<bool> {
    padic_density_check_with_exponent(p, super::euler::LOCAL_EXPONENT)
}

/// [`padic_density_check`] against a local factor built with exponent `e`
/// instead of 4. Any other exponent must fail.
pub fn padic_density_check_with_exponent(p: u64, e: u32) -> Result<bool> {
    let u = ff_surface_count(p)?.open;
    let q = BigRational::from_integer(p.into());
    let one = BigRational::from_integer(1.into());
    let density = (&one - one.clone() / &q).pow(4) * BigRational::from_integer(u.into()) / (&q * &q);
    Ok(local_factor_with_exponent(p, e)? == density)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_for_small_primes() {
        for p in [2u64, 3, 5, 7, 11] {
            let c = ff_surface_count(p).unwrap();
            assert_eq!(c.surface, p * p + 5 * p + 1, "p = {p}");
            assert_eq!(c.open, p * p + 4 * p, "p = {p}");
        }
    }

    #[test]
    fn naive_agrees() {
        for p in [2u64, 3] {
            assert_eq!(ff_surface_count_naive(p).unwrap(), ff_surface_count(p).unwrap());
        }
        assert_eq!(ff_surface_count_naive(7), Err(Error::PrimeOutOfRange(7)));
    }

    #[test]
    fn densities() {
        for p in [2u64, 3, 5, 7] {
            assert!(padic_density_check(p).unwrap());
            assert!(!padic_density_check_with_exponent(p, 3).unwrap());
        }
        assert_eq!(padic_density_check(9), Err(Error::NotPrime(9)));
    }
}
