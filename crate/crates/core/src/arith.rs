//! Machine-integer number theory used on the hot counting paths.
//!
//! Everything here is exact; callers are responsible for keeping operands
//! inside the ranges documented on each function.

/// Greatest common divisor of the absolute values; `gcd(0, 0) = 0`.
#[inline]
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    if a == 0 {
        return b as i64;
    }
    if b == 0 {
        return a as i64;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return (a << shift) as i64;
        }
    }
}

/// Floor of the square root of a nonnegative integer (0 for negative input).
#[inline]
pub fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        0
    } else {
        (n as u64).isqrt() as i64
    }
}

/// Inverse of `a` modulo `m > 0`, assuming `gcd(a, m) = 1`. Returns 0 for `m = 1`.
pub fn inv_mod(a: i64, m: i64) -> i64 {
    debug_assert!(m > 0);
    if m == 1 {
        return 0;
    }
    let (mut r0, mut r1) = (a.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "inv_mod called with non-coprime arguments");
    s0.rem_euclid(m)
}

/// `ceil(a / b)` for `b > 0`.
#[inline]
pub fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// `floor(a / b)` for `b > 0`.
#[inline]
pub fn div_floor(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// All primes `<= n` by the sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Deterministic primality by trial division; intended for small arguments.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
