//! The real density: twice the area of `{y in R² : max_P |P(y1, y2, 0)| <= 1}`.
//!
//! With `F(y) = max_P |P(y1, y2, 0)|` homogeneous of degree 2, the region
//! `F <= T` is star-shaped and, in the two charts `y2 = t y1` and
//! `y1 = s y2` with `|t|, |s| <= 1`, has area
//! `T ∫ dt / F(1, t) + T ∫ ds / F(s, 1)`. Each chart interval is cut into
//! cells. On a cell the exact range of every restricted form is known
//! (endpoints plus vertex), giving `Fmin <= F <= Fmax`, so the cell
//! contributes between `Δ/Fmax` and `Δ/Fmin`: the inner sector up to radius
//! `sqrt(T/Fmax)` lies in the region and the outer one up to `sqrt(T/Fmin)`
//! covers it. Cells are halved until their contribution is tight enough.

use std::sync::atomic::{AtomicU64, Ordering};

use num_rational::BigRational;
use num_traits::{FromPrimitive, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::interval::Interval;
use super::polytope::McEstimate;
use crate::error::{Error, Result};
use crate::heights::HeightSet;

/// Maximum number of accepted cells per computation.
pub const CELL_BUDGET: u64 = 400_000_000;

const INITIAL_CELLS: usize = 256;
const MAX_DEPTH: u32 = 48;
/// Relative slack absorbing floating-point error in sums and final scaling.
const SUM_SLACK: f64 = 1e-12;

/// A form restricted to a chart: `c0 + c1 u + c2 u²`, with the sum of
/// absolute coefficients used to bound evaluation error.
#[derive(Clone, Copy, Debug)]
struct Quad {
    c: [f64; 3],
    err: f64,
}

impl Quad {
    fn new(c: [f64; 3]) -> Self {
        let err = 1e-13 * (c[0].abs() + c[1].abs() + c[2].abs());
        Self { c, err }
    }

    fn eval(&self, u: f64) -> f64 {
        self.c[0] + u * (self.c[1] + u * self.c[2])
    }

    /// Enclosure of `|q|` on `[u0, u1]`.
    fn abs_range(&self, u0: f64, u1: f64) -> (f64, f64) {
        let (a, b) = (self.eval(u0), self.eval(u1));
        let (mut lo, mut hi) = (a.min(b), a.max(b));
        if self.c[2] != 0.0 {
            let v = -self.c[1] / (2.0 * self.c[2]);
            if u0 < v && v < u1 {
                let w = self.eval(v);
                lo = lo.min(w);
                hi = hi.max(w);
            }
        }
        let (lo, hi) = (lo - self.err, hi + self.err);
        if lo <= 0.0 && hi >= 0.0 {
            (0.0, hi.max(-lo))
        } else {
            (lo.abs().min(hi.abs()), lo.abs().max(hi.abs()))
        }
    }
}

fn charts(ps: &HeightSet) -> Result<[Vec<Quad>; 2]> {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for f in ps.forms() {
        let c = f.coefficients();
        let g = |i: usize| {
            c[i].to_f64()
                .filter(|v| v.abs() < 1e15)
                .ok_or_else(|| Error::InvalidHeightSet("coefficients too large for quadrature".into()))
        };
        let (c11, c22, c12) = (g(0)?, g(1)?, g(3)?);
        a.push(Quad::new([c11, c12, c22]));
        b.push(Quad::new([c22, c12, c11]));
    }
    Ok([a, b])
}

/// Enclosure of `∫ du / F` over a cell with accepted-cell tolerance `tau`
/// per unit length, plus a lower bound of `F` on the cell.
fn integrate(qs: &[Quad], u0: f64, u1: f64, tau: f64, depth: u32, cells: &AtomicU64) -> Result<(f64, f64, f64)> {
    let (mut fmin, mut fmax) = (0.0f64, 0.0f64);
    for q in qs {
        let (lo, hi) = q.abs_range(u0, u1);
        fmin = fmin.max(lo);
        fmax = fmax.max(hi);
    }
    let du = u1 - u0;
    let lo = du / fmax;
    let hi = if fmin > 0.0 { du / fmin } else { f64::INFINITY };
    if hi - lo <= tau * du {
        if cells.fetch_add(1, Ordering::Relaxed) >= CELL_BUDGET {
            return Err(Error::ToleranceNotReached);
        }
        return Ok((lo, hi, fmin));
    }
    if depth >= MAX_DEPTH {
        return Err(Error::ToleranceNotReached);
    }
    let mid = 0.5 * (u0 + u1);
    let a = integrate(qs, u0, mid, tau, depth + 1, cells)?;
    let b = integrate(qs, mid, u1, tau, depth + 1, cells)?;
    Ok((a.0 + b.0, a.1 + b.1, a.2.min(b.2)))
}

/// Result of [`region_area`].
#[derive(Clone, Debug, PartialEq)]
pub struct RegionEnclosure {
    /// Encloses the area of `{F <= T}`.
    pub area: Interval,
    /// The region lies in `[-h, h]²`.
    pub half_width: f64,
    /// Number of accepted cells.
    pub cells: u64,
}

/// Area of `{y in R² : F(y) <= threshold}` as an enclosure of width at most `tol`.
pub fn region_area(ps: &HeightSet, threshold: f64, tol: f64) -> Result<RegionEnclosure> {
    if !(threshold > 0.0 && threshold.is_finite()) {
        return Err(Error::InvalidArgument("threshold must be positive".into()));
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let charts = charts(ps)?;
    // Total chart length 4; leave some room for the final slack.
    let tau = 0.9 * tol / (4.0 * threshold);
    let cells = AtomicU64::new(0);
    let jobs: Vec<(usize, f64, f64)> = (0..2)
        .flat_map(|c| {
            (0..INITIAL_CELLS).map(move |i| {
                let w = 2.0 / INITIAL_CELLS as f64;
                (c, -1.0 + i as f64 * w, -1.0 + (i + 1) as f64 * w)
            })
        })
        .collect();
    let parts = jobs
        .par_iter()
        .map(|&(c, u0, u1)| integrate(&charts[c], u0, u1, tau, 0, &cells))
        .collect::<Result<Vec<_>>>()?;
    let (mut lo, mut hi, mut fmin) = (0.0, 0.0, f64::INFINITY);
    for (a, b, f) in parts {
        lo += a;
        hi += b;
        fmin = fmin.min(f);
    }
    let lo = lo * threshold * (1.0 - SUM_SLACK);
    let hi = hi * threshold * (1.0 + SUM_SLACK);
    // |y_i| <= sqrt(T / F(direction)) in either chart.
    let half_width = (threshold / fmin).sqrt() * (1.0 + SUM_SLACK);
    let area = Interval::new(
        BigRational::from_f64(lo).ok_or(Error::ToleranceNotReached)?,
        BigRational::from_f64(hi).ok_or(Error::ToleranceNotReached)?,
    );
    Ok(RegionEnclosure { area, half_width, cells: cells.into_inner() })
}

/// Twice the area of `{F <= 1}`, as an enclosure of width at most `tol`.
pub fn archimedean_density(ps: &HeightSet, tol: f64) -> Result<Interval> {
    let r = region_area(ps, 1.0, tol / 2.0)?;
    Ok(r.area.scale(&BigRational::from_integer(2.into())))
}

/// Half-width of a square box certainly containing `{F <= threshold}`:
/// the containment bound rounded up to an integer, and at least 2.
pub fn containment_box(ps: &HeightSet, threshold: f64) -> Result<f64> {
    let r = region_area(ps, threshold, threshold)?;
    Ok(r.half_width.ceil().max(2.0))
}

/// Hit-or-miss estimate of the area of `{F <= threshold}` over `[-h, h]²`.
pub fn region_area_monte_carlo(ps: &HeightSet, threshold: f64, h: f64, samples: u64, seed: u64) -> Result<McEstimate> {
    let forms: Vec<[f64; 3]> = charts(ps)?[0].iter().map(|q| q.c).collect();
    const BATCH: u64 = 1 << 20;
    let batches: Vec<(u64, u64)> = (0..samples.div_ceil(BATCH))
        .map(|i| (i, BATCH.min(samples - i * BATCH)))
        .collect();
    let hits: u64 = batches
        .par_iter()
        .map(|&(i, n)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i);
            let mut hits = 0;
            for _ in 0..n {
                let y1 = (2.0 * rng.random::<f64>() - 1.0) * h;
                let y2 = (2.0 * rng.random::<f64>() - 1.0) * h;
                let inside = forms
                    .iter()
                    .all(|c| (c[0] * y1 * y1 + c[1] * y1 * y2 + c[2] * y2 * y2).abs() <= threshold);
                hits += inside as u64;
            }
            hits
        })
        .sum();
    Ok(McEstimate::from_hits(hits, samples, 4.0 * h * h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::interval::to_f64;

    #[test]
    fn area_of_the_p1_region() {
        let p1 = HeightSet::p1();
        let r = region_area(&p1, 1.0, 1e-4).unwrap();
        assert!(to_f64(&r.area.width()) <= 1e-4);
        // F >= 1/2 on both charts, so the region lies in [-sqrt 2, sqrt 2]².
        assert!(r.half_width >= 2f64.sqrt() && r.half_width < 1.42);
        let mc = region_area_monte_carlo(&p1, 1.0, 2.0, 1_000_000, 3).unwrap();
        assert!(mc.agrees_with(r.area.midpoint_f64(), 4.0), "{mc:?} vs {}", r.area);
    }

    #[test]
    fn p1_density_is_twelve_log_two() {
        // On t in [-1, 0] F(1,t) = 1 - t, on [0, 1] F(1,t) = max(t, 1 - t);
        // the second chart is symmetric. So the area is 6 ln 2.
        let w = archimedean_density(&HeightSet::p1(), 1e-6).unwrap();
        let exact = 12.0 * std::f64::consts::LN_2;
        let slack = Interval::from_f64(exact - 1e-14, exact + 1e-14);
        assert!(w.intersects(&slack), "{w}");
        assert!(to_f64(&w.width()) <= 1e-6);
    }

    #[test]
    fn homogeneity_and_monotonicity() {
        let p1 = HeightSet::p1();
        let a1 = region_area(&p1, 1.0, 1e-4).unwrap().area;
        let a4 = region_area(&p1, 4.0, 4e-4).unwrap().area;
        assert!(a4.intersects(&a1.scale(&BigRational::from_integer(4.into()))));
        let w1 = archimedean_density(&p1, 1e-3).unwrap();
        let w3 = archimedean_density(&HeightSet::p3(), 1e-3).unwrap();
        assert!(w3.hi <= w1.hi && w3.lo <= w1.lo);
    }

    #[test]
    fn refinement_nests() {
        let p2 = HeightSet::p2();
        let coarse = archimedean_density(&p2, 1e-2).unwrap();
        let fine = archimedean_density(&p2, 1e-4).unwrap();
        // Both runs subdivide the same dyadic tree, so finer cells only tighten.
        assert!(coarse.contains_interval(&fine), "{coarse} vs {fine}");
        assert!(fine.width() < coarse.width());
    }
}
