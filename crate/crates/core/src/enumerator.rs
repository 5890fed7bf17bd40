//! Exact counts `N(B)` of integral points of height at most `B` off the lines.
//!
//! Two independent methods are provided:
//!
//! * [`count_torsor`] enumerates canonical Cox tuples (`a1..a4 > 0`, `a12 = 1`)
//!   satisfying the torsor equations and coprimality conditions.
//! * [`count_direct`] scans primitive triples of P²(ℚ) in the box `|y_i| <= kappa B`.
//!
//! # Torsor enumeration
//!
//! Every counted tuple has all ten log-anticanonical monomials
//! (`a1a2a23a14`, `a1a2a13a24`, `a2a3a23a34`, `a1a3a13a34`, `a2²a23a24`,
//! `a1²a13a14`, `a3a4a34²`, `a1a2a34`, `a2a4a24a34`, `a1a4a14a34`) bounded in
//! absolute value by `X = kappa3 B`, where `kappa3` compares the full set of
//! ten forms with the chosen height set.
//!
//! Writing the ten lines as pairs of {1,..,5} (`a_i = p_{i5}`, `a_jk` = the
//! complementary pair of {1,..,4}), permutations of the labels {1,2,5} act on
//! the coordinates by signed permutations. They preserve the torsor equations,
//! the coprimality conditions, `a12`, and the set of ten monomials. They act
//! simply transitively on the six products
//! `a1a3a4, a2a3a4, a1a23a24, a2a13a14, a13a14a34, a23a24a34`. So it suffices
//! to enumerate tuples where `a1a3a4` is the smallest of the six, which
//! forces `a1 <= a2` and `a2² a3 a4 <= X`, and then to map each found tuple
//! through the six permutations. An image is kept if its height is at most
//! `B` and the permutation used is the one selected by the first minimal
//! product of the image, so every point is counted exactly once.
//!
//! Within a fixed `(a1, a2, a3, a4)` the loops are arithmetic progressions:
//! `a23 ≡ a1 a3⁻¹ (mod a4)`, then `a34 ≡ a2 a23 a4⁻¹ (mod a1)`, with the
//! remaining coordinates determined by the torsor equations.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{div_ceil, div_floor, gcd, inv_mod, isqrt};
use crate::error::{Error, Result};
use crate::heights::{comparison_constant_for, HeightSet, MonomialHeight};
use crate::torsor::small::{canonicalize_orbit, p1_monomials};

/// Largest supported monomial bound `kappa3 * B`; keeps every intermediate
/// product of two bounded quantities inside `i64`.
pub const MAX_MONOMIAL_BOUND: u64 = 1 << 31;

/// Counting method.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Torsor,
    Direct,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Torsor => "torsor",
            Method::Direct => "direct",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One row of the empirical series.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountRecord {
    pub bound: u64,
    pub count: u64,
    pub height_set_id: String,
    pub method: Method,
    /// Wall-clock time of the computation; metadata only.
    pub elapsed_seconds: f64,
}

/// `N(B)` by torsor enumeration.
pub fn count_torsor(b: u64, ps: &HeightSet) -> Result<CountRecord> {
    Ok(count_series(&[b], ps)?.remove(0))
}

/// `N(B)` for each bound in an ascending list, from a single enumeration up to
/// the largest bound.
pub fn count_series(bounds: &[u64], ps: &HeightSet) -> Result<Vec<CountRecord>> {
    if bounds.is_empty() {
        return Ok(Vec::new());
    }
    if bounds.contains(&0) {
        return Err(Error::InvalidArgument("height bounds must be positive".into()));
    }
    if bounds.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidArgument("height bounds must be ascending".into()));
    }
    let start = Instant::now();
    let engine = Engine::new(*bounds.last().unwrap(), ps)?;
    let buckets = engine.run(
        || vec![0u64; bounds.len()],
        |acc, _, h| {
            let i = bounds.partition_point(|&b| b < h);
            acc[i] += 1;
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    let elapsed = start.elapsed().as_secs_f64();
    let mut total = 0;
    Ok(bounds
        .iter()
        .zip(buckets)
        .map(|(&bound, n)| {
            total += n;
            CountRecord {
                bound,
                count: total,
                height_set_id: ps.key(),
                method: Method::Torsor,
                elapsed_seconds: elapsed,
            }
        })
        .collect())
}

/// Calls `f(tuple, height)` for every counted point, with the canonical Cox
/// tuple (`a1..a4 > 0`, `a12 = 1`) in the order
/// `(a1, a2, a3, a4, a12, a13, a14, a23, a24, a34)`. Calls may come from
/// several threads in any order.
pub fn for_each_point<F>(b: u64, ps: &HeightSet, f: F) -> Result<()>
where
    F: Fn(&[i64; 10], u64) + Sync,
{
    let engine = Engine::new(b, ps)?;
    engine.run(|| (), |_, y, h| f(&canonicalize_orbit(y), h), |_, _| ());
    Ok(())
}

/// All counted points as canonical Cox tuples, sorted.
pub fn collect_points(b: u64, ps: &HeightSet) -> Result<Vec<[i64; 10]>> {
    let engine = Engine::new(b, ps)?;
    let mut v = engine.run(
        Vec::new,
        |acc, y, _| acc.push(canonicalize_orbit(y)),
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    );
    v.sort_unstable();
    Ok(v)
}

/// `N(B)` by direct search over primitive triples with `|y_i| <= kappa B`.
pub fn count_direct(b: u64, ps: &HeightSet) -> Result<CountRecord> {
    let start = Instant::now();
    let count = direct_scan(b, ps, || 0u64, |n, _, _| *n += 1, |a, b| a + b)?;
    Ok(CountRecord {
        bound: b,
        count,
        height_set_id: ps.key(),
        method: Method::Direct,
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}

/// All points found by the direct search, as sorted sign-canonical triples.
pub fn collect_points_direct(b: u64, ps: &HeightSet) -> Result<Vec<[i64; 3]>> {
    let mut v = direct_scan(
        b,
        ps,
        Vec::new,
        |acc, y, _| acc.push(*y),
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )?;
    v.sort_unstable();
    Ok(v)
}

fn direct_scan<S, M, V, R>(b: u64, ps: &HeightSet, make: M, visit: V, merge: R) -> Result<S>
where
    S: Send,
    M: Fn() -> S + Sync + Send,
    V: Fn(&mut S, &[i64; 3], u64) + Sync + Send,
    R: Fn(S, S) -> S + Sync + Send,
{
    if b == 0 {
        return Err(Error::InvalidArgument("height bound must be positive".into()));
    }
    let kb = ps
        .kappa()
        .checked_mul(b)
        .filter(|&v| v <= 1 << 20)
        .ok_or(Error::BoundTooLarge(b))? as i64;
    let forms: Vec<[i128; 6]> = ps
        .forms()
        .iter()
        .map(|f| {
            let mut r = [0i128; 6];
            for (d, c) in r.iter_mut().zip(f.coefficients()) {
                *d = i128::try_from(c).map_err(|_| Error::InvalidHeightSet("coefficients too large".into()))?;
            }
            Ok(r)
        })
        .collect::<Result<_>>()?;
    let b = b as i128;
    let y3s: Vec<i64> = (1..=kb).flat_map(|v| [v, -v]).collect();
    Ok(y3s
        .par_iter()
        .fold(&make, |mut acc, &y3| {
            for y1 in 1..=kb {
                if y1 == y3 {
                    continue;
                }
                // Integrality |y3| = gcd(y2,y3) gcd(y1,y3) forces a1 = |y3|/gcd(y1,y3)
                // to divide y2, with gcd(y2, y3) = a1 exactly.
                let g13 = gcd(y1, y3);
                let a1 = y3.abs() / g13;
                let mut y2 = -(kb / a1) * a1;
                while y2 <= kb {
                    let cur = y2;
                    y2 += a1;
                    if cur == 0 || cur == y1 || cur == y3 || gcd(cur, y3) != a1 || gcd(g13, cur) != 1 {
                        continue;
                    }
                    let y = [y1, cur, y3];
                    let den = gcd(y1, cur) as i128 * gcd(y1 - cur, y1 - y3) as i128;
                    let (v1, v2, v3) = (y1 as i128, cur as i128, y3 as i128);
                    let mon = [v1 * v1, v2 * v2, v3 * v3, v1 * v2, v1 * v3, v2 * v3];
                    let max = forms
                        .iter()
                        .map(|f| f.iter().zip(&mon).map(|(c, m)| c * m).sum::<i128>().abs())
                        .max()
                        .unwrap_or(0);
                    if max <= b * den {
                        visit(&mut acc, &y, (max / den) as u64);
                    }
                }
            }
            acc
        })
        .reduce(&make, &merge))
}

// ---------------------------------------------------------------------------
// Torsor engine
// ---------------------------------------------------------------------------

type Tuple = [i64; 10];

/// Label permutation (1 2): swaps a1/a2, a13/a23, a14/a24 and negates a34.
#[inline]
fn swap12(a: &Tuple) -> Tuple {
    [a[1], a[0], a[2], a[3], a[4], a[7], a[8], a[5], a[6], -a[9]]
}

/// Label permutation (1 5).
#[inline]
fn swap15(a: &Tuple) -> Tuple {
    [-a[0], -a[9], -a[8], -a[7], a[4], a[5], a[6], -a[3], -a[2], -a[1]]
}

/// Label permutation (2 5).
#[inline]
fn swap25(a: &Tuple) -> Tuple {
    [a[9], -a[1], -a[6], -a[5], a[4], -a[3], -a[2], a[7], a[8], a[0]]
}

/// The six products `a1a3a4, a2a3a4, a1a23a24, a2a13a14, a13a14a34, a23a24a34`
/// in absolute value.
#[inline]
fn six_products(a: &Tuple) -> [i64; 6] {
    [
        (a[0] * a[2] * a[3]).abs(),
        (a[1] * a[2] * a[3]).abs(),
        (a[0] * a[7] * a[8]).abs(),
        (a[1] * a[5] * a[6]).abs(),
        (a[5] * a[6] * a[9]).abs(),
        (a[7] * a[8] * a[9]).abs(),
    ]
}

/// For the images `[id, (12), (15), (25), (12)(15), (15)(12)]` of a tuple,
/// the index of the product that `a1a3a4` is sent to.
const IMAGE_OF_FIRST: [usize; 6] = [0, 1, 2, 4, 3, 5];

#[inline]
fn images(x: &Tuple) -> [Tuple; 6] {
    let s12 = swap12(x);
    let s15 = swap15(x);
    [*x, s12, s15, swap25(x), swap12(&s15), swap15(&s12)]
}

/// A slice of the outer loops: `a3` in `a3.0..=a3.1`, `a4` in `a4.0..=a4.1`
/// (further capped by `a3 a4 <= X`).
#[derive(Clone, Copy, Debug)]
struct Job {
    a3: (i64, i64),
    a4: (i64, i64),
}

struct Engine {
    b: i64,
    x: i64,
    height: MonomialHeight,
}

impl Engine {
    fn new(b: u64, ps: &HeightSet) -> Result<Self> {
        if b == 0 {
            return Err(Error::InvalidArgument("height bound must be positive".into()));
        }
        let kappa3 = comparison_constant_for(HeightSet::p3().forms(), ps)?;
        let x = kappa3
            .checked_mul(b)
            .filter(|&x| x <= MAX_MONOMIAL_BOUND)
            .ok_or(Error::BoundTooLarge(b))?;
        Ok(Self { b: b as i64, x: x as i64, height: MonomialHeight::new(ps)? })
    }

    fn jobs(&self) -> Vec<Job> {
        const CHUNK: i64 = 4096;
        let x = self.x;
        let mut jobs = Vec::new();
        let mut a3 = 1;
        while a3 <= x {
            let n4 = x / a3;
            if n4 >= CHUNK {
                let mut lo = 1;
                while lo <= n4 {
                    jobs.push(Job { a3: (a3, a3), a4: (lo, (lo + CHUNK - 1).min(n4)) });
                    lo += CHUNK;
                }
                a3 += 1;
            } else {
                // Group consecutive a3 values until roughly CHUNK pairs.
                let first = a3;
                let mut pairs = 0;
                while a3 <= x && pairs < CHUNK {
                    pairs += x / a3;
                    a3 += 1;
                }
                jobs.push(Job { a3: (first, a3 - 1), a4: (1, n4) });
            }
        }
        jobs
    }

    /// Runs the enumeration in parallel. `visit` receives each counted point
    /// as a (not necessarily canonical) Cox tuple with `a12 = 1`, and its height.
    fn run<S, M, V, R>(&self, make: M, visit: V, merge: R) -> S
    where
        S: Send,
        M: Fn() -> S + Sync + Send,
        V: Fn(&mut S, &Tuple, u64) + Sync + Send,
        R: Fn(S, S) -> S + Sync + Send,
    {
        self.jobs()
            .par_iter()
            .fold(&make, |mut acc, job| {
                for a3 in job.a3.0..=job.a3.1 {
                    let hi = job.a4.1.min(self.x / a3);
                    for a4 in job.a4.0..=hi {
                        self.outer(a3, a4, &mut acc, &visit);
                    }
                }
                acc
            })
            .reduce(&make, &merge)
    }

    #[inline]
    fn outer<S, V>(&self, a3: i64, a4: i64, acc: &mut S, visit: &V)
    where
        V: Fn(&mut S, &Tuple, u64),
    {
        if gcd(a3, a4) != 1 {
            return;
        }
        let x = self.x;
        let p = a3 * a4;
        let inv3 = inv_mod(a3, a4);
        for a2 in 1..=isqrt(x / p) {
            if gcd(a2, p) != 1 {
                continue;
            }
            let f5 = x / (a2 * a2);
            for a1 in 1..=a2 {
                if gcd(a1, a2 * p) != 1 {
                    continue;
                }
                self.rows([a1, a2, a3, a4], f5, inv3, acc, visit);
            }
        }
    }

    /// Loops over `a23` for fixed `a' = (a1, a2, a3, a4)`.
    #[inline]
    fn rows<S, V>(&self, ap: [i64; 4], f5: i64, inv3: i64, acc: &mut S, visit: &V)
    where
        V: Fn(&mut S, &Tuple, u64),
    {
        let [a1, a2, a3, a4] = ap;
        let x = self.x;
        let p = a3 * a4;
        // a2² |a23 a24| <= X with a4 a24 = a3 a23 - a1 gives
        // |a23 (a3 a23 - a1)| <= a4 floor(X / a2²) =: k, hence the bound on |a23|.
        let k = a4 as i128 * f5 as i128;
        let disc = a1 as i128 * a1 as i128 + 4 * a3 as i128 * k;
        let zmax = ((a1 as i128 + disc.isqrt()) / (2 * a3 as i128) + 1) as i64;
        let zmax = zmax.min(x / (a1 * a2)).min(x / (a2 * a3));
        let r0 = (a1 * inv3) % a4;
        let inv4 = inv_mod(a4, a1);
        let mut z = -zmax + (r0 + zmax).rem_euclid(a4);
        while z <= zmax {
            let a23 = z;
            z += a4;
            if a23 == 0 || gcd(a23 % a1, a1) != 1 {
                continue;
            }
            let n = a3 * a23 - a1;
            if n == 0 {
                continue;
            }
            let a24 = n / a4;
            let f = (a23 * a24).abs();
            // a1a3a4 <= a1|a23 a24| (minimality) and the a2²a23a24 monomial.
            if f < p || f > f5 {
                continue;
            }
            self.columns(ap, a23, a24, inv4, acc, visit);
        }
    }

    /// Loops over `a34` for fixed `a'`, `a23`, `a24`.
    #[inline]
    fn columns<S, V>(&self, ap: [i64; 4], a23: i64, a24: i64, inv4: i64, acc: &mut S, visit: &V)
    where
        V: Fn(&mut S, &Tuple, u64),
    {
        let [a1, a2, a3, a4] = ap;
        let x = self.x;
        let p = a3 * a4;
        let (z, w24) = (a23.abs(), a24.abs());
        // |a13| <= u from a1a2a13a24, |a14| <= t from a1a2a23a14.
        let u = x / (a1 * a2 * w24);
        let t = x / (a1 * a2 * z);
        // |a34| from a3a4a34², a2a3a23a34, a2a4a24a34, a1a2a34.
        let m = isqrt(x / p)
            .min(x / (a2 * a3 * z))
            .min(x / (a2 * a4 * w24))
            .min(x / (a1 * a2));
        // a1 a13 = a2 a23 - a4 a34.
        let mut lo = div_ceil(a2 * a23 - u * a1, a4).max(-m);
        let mut hi = div_floor(a2 * a23 + u * a1, a4).min(m);
        // a1 a4 a14 = a2a3a23 - a1a2 - a3a4a34.
        let c = a2 * a3 * a23 - a1 * a2;
        let w = t * a1 * a4;
        lo = lo.max(div_ceil(c - w, p));
        hi = hi.min(div_floor(c + w, p));
        if lo > hi {
            return;
        }
        let res = ((a2 * a23).rem_euclid(a1) * inv4) % a1;
        let mut a34 = lo + (res - lo).rem_euclid(a1);
        let mu1 = a1 * p;
        while a34 <= hi {
            let c34 = a34;
            a34 += a1;
            if c34 == 0 {
                continue;
            }
            let a13 = (a2 * a23 - a4 * c34) / a1;
            if a13 == 0 {
                continue;
            }
            let n14 = a3 * a13 - a2;
            if n14 == 0 {
                continue;
            }
            let a14 = n14 / a4;
            let tuple: Tuple = [a1, a2, a3, a4, 1, a13, a14, a23, a24, c34];
            if !self.monomials_bounded(&tuple) {
                continue;
            }
            let (w13, w14, w34) = (a13.abs() as i128, a14.abs() as i128, c34.abs() as i128);
            let mu1 = mu1 as i128;
            if (a2 as i128) * w13 * w14 < mu1 || w13 * w14 * w34 < mu1 || (z * w24) as i128 * w34 < mu1 {
                continue;
            }
            // With a12 = 1 and a' pairwise coprime, the remaining conditions
            // reduce to gcd(a1, a23) = 1 (checked per row) and
            // gcd(a34, a2 a23 a24) = 1.
            let r = ((a2 * a23) % c34) as i128 * (a24 % c34) as i128 % c34 as i128;
            if gcd(r as i64, c34) != 1 {
                continue;
            }
            self.emit(&tuple, acc, visit);
        }
    }

    /// All ten monomials at most X in absolute value. A product overflowing
    /// `i64` certainly exceeds X.
    #[inline]
    fn monomials_bounded(&self, a: &Tuple) -> bool {
        #[inline]
        fn within(x: i64, f: &[i64]) -> bool {
            let mut acc: i64 = 1;
            for &v in f {
                match acc.checked_mul(v) {
                    Some(m) => acc = m,
                    None => return false,
                }
            }
            acc.abs() <= x
        }
        let x = self.x;
        let [a1, a2, a3, a4, _, a13, a14, a23, a24, a34] = *a;
        within(x, &[a1, a2, a23, a14])
            && within(x, &[a1, a2, a13, a24])
            && within(x, &[a2, a3, a23, a34])
            && within(x, &[a1, a3, a13, a34])
            && within(x, &[a2, a2, a23, a24])
            && within(x, &[a1, a1, a13, a14])
            && within(x, &[a3, a4, a34, a34])
            && within(x, &[a1, a2, a34])
            && within(x, &[a2, a4, a24, a34])
            && within(x, &[a1, a4, a14, a34])
    }

    #[inline]
    fn emit<S, V>(&self, x: &Tuple, acc: &mut S, visit: &V)
    where
        V: Fn(&mut S, &Tuple, u64),
    {
        for (s, y) in images(x).iter().enumerate() {
            // The six products of an image are those of x, permuted; they fit
            // in i64 because the ten monomials are bounded.
            let mu = six_products(y);
            let min = mu.iter().copied().min().unwrap();
            if mu.iter().position(|&v| v == min) != Some(IMAGE_OF_FIRST[s]) {
                continue;
            }
            let h = self.height.eval(&p1_monomials(y));
            if h <= self.b as i128 {
                visit(acc, y, h as u64);
            }
        }
    }
}
