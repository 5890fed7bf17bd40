//! Invariant checks behind `dp5 verify`, also used by the acceptance run.

use std::fmt;
use std::time::Instant;

use dp5_core::constants::archimedean::containment_box;
use dp5_core::constants::finite_field::padic_density_check_with_exponent;
use dp5_core::constants::interval::{to_f64, Interval};
use dp5_core::constants::{
    alpha_exact, alpha_monte_carlo, archimedean_density, ff_surface_count, ff_surface_count_naive, leading_constant,
    region_area, region_area_monte_carlo,
};
use dp5_core::enumerator::{collect_points, collect_points_direct, count_direct, count_series, count_torsor};
use dp5_core::heights::{gcd_identity_check, height_cox, height_projective, lift_ptilde, HeightSet, HeightSetId};
use dp5_core::torsor::{blow_down, chart_lift, coprimality_check, is_integral, pluecker_residuals, CoxTuple};
use dp5_core::arith::gcd;
use dp5_core::heights::ProjectivePoint;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::args::Suite;
use crate::commands::MC_SEED;
use crate::golden;

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{:<30} {status}  {:>8.2}s  {}", self.name, self.seconds, self.detail)
    }
}

/// Runs `f` and records its verdict; an error counts as a failure.
fn timed(name: &'static str, f: impl FnOnce() -> anyhow::Result<(bool, String)>) -> Check {
    let start = Instant::now();
    let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e:#}")));
    Check { name, passed, detail, seconds: start.elapsed().as_secs_f64() }
}

/// Sizes of the sampled and enumerated checks.
#[derive(Clone, Debug)]
pub struct Options {
    pub cross_bounds: Vec<u64>,
    pub primes: Vec<u64>,
    pub naive_primes: Vec<u64>,
    pub euler_exponent: u32,
    pub gcd_samples: u64,
    pub roundtrip_samples: u64,
    pub invariants_bound: u64,
    pub mc_samples: u64,
    pub quad_tol: f64,
    pub golden_recount_limit: u64,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            cross_bounds: vec![1, 4, 10, 50, 100, 500],
            primes: vec![2, 3, 5, 7, 11, 13],
            naive_primes: vec![2, 3, 5],
            euler_exponent: 4,
            gcd_samples: 10_000,
            roundtrip_samples: 10_000,
            invariants_bound: 1_000,
            mc_samples: 1_000_000,
            quad_tol: 1e-4,
            golden_recount_limit: 10_000,
        }
    }
}

fn builtin_sets() -> [HeightSet; 3] {
    [HeightSet::p1(), HeightSet::p2(), HeightSet::p3()]
}

/// `count_torsor = count_direct` on every bound and built-in set, and the
/// point sets themselves agree for bounds up to 100.
pub fn cross_method_counts(bounds: &[u64]) -> Check {
    timed("cross_method_counts", || {
        let mut cases = 0;
        for ps in builtin_sets() {
            for &b in bounds {
                let t = count_torsor(b, &ps)?.count;
                let d = count_direct(b, &ps)?.count;
                if t != d {
                    return Ok((false, format!("{} B={b}: torsor {t} != direct {d}", ps.key())));
                }
                if b <= 100 {
                    let mut from_torsor: Vec<[i64; 3]> = collect_points(b, &ps)?
                        .iter()
                        .map(|a| blow_down(&CoxTuple::from_i64(*a)).map(|y| y.to_i64().expect("small point")))
                        .collect::<Result<_, _>>()?;
                    from_torsor.sort_unstable();
                    if from_torsor != collect_points_direct(b, &ps)? {
                        return Ok((false, format!("{} B={b}: point sets differ", ps.key())));
                    }
                }
                cases += 1;
            }
        }
        Ok((true, format!("{cases} (B, height set) cases agree")))
    })
}

/// `#X(F_p) = p²+5p+1` and `#U(F_p) = p²+4p`, and the naive count agrees.
pub fn ff_counts(primes: &[u64], naive_primes: &[u64]) -> Check {
    timed("ff_surface_count", || {
        for &p in primes {
            let c = ff_surface_count(p)?;
            if (c.surface, c.open) != (p * p + 5 * p + 1, p * p + 4 * p) {
                return Ok((false, format!("p={p}: got ({}, {})", c.surface, c.open)));
            }
        }
        for &p in naive_primes {
            if ff_surface_count_naive(p)? != ff_surface_count(p)? {
                return Ok((false, format!("p={p}: naive count differs")));
            }
        }
        Ok((true, format!("p in {primes:?}; naive oracle for {naive_primes:?}")))
    })
}

pub fn padic_density(primes: &[u64], exponent: u32) -> Check {
    timed("padic_density_check", || {
        for &p in primes {
            if !padic_density_check_with_exponent(p, exponent)? {
                return Ok((false, format!("p={p}: local factor with exponent {exponent} != density")));
            }
        }
        Ok((true, format!("exact equality for p in {primes:?}")))
    })
}

/// Random primitive integer triples with `|y_i| <= 1000`, not blown-up points,
/// optionally off the six lines.
fn random_points(n: u64, seed: u64, off_lines: bool) -> Vec<ProjectivePoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n as usize);
    while (out.len() as u64) < n {
        let y: [i64; 3] = std::array::from_fn(|_| rng.random_range(-1000..=1000));
        if gcd(gcd(y[0], y[1]), y[2]) != 1 {
            continue;
        }
        let p = ProjectivePoint::from_i64(y[0], y[1], y[2]).expect("nonzero");
        if p.is_blown_up_point() || (off_lines && p.is_on_lines()) {
            continue;
        }
        out.push(p);
    }
    out
}

pub fn gcd_identity(samples: u64) -> Check {
    timed("gcd_identity", || {
        let pts = random_points(samples, MC_SEED, false);
        for ps in builtin_sets() {
            let bad = pts
                .par_iter()
                .filter(|y| !gcd_identity_check(&ps, y).unwrap_or(false))
                .count();
            if bad > 0 {
                return Ok((false, format!("{}: {bad} violations", ps.key())));
            }
        }
        Ok((true, format!("{samples} points x 3 height sets")))
    })
}

pub fn round_trip(samples: u64) -> Check {
    timed("round_trip", || {
        let pts = random_points(samples, MC_SEED + 1, true);
        let bad = pts
            .par_iter()
            .filter(|y| !matches!(chart_lift(y).and_then(|t| blow_down(&t)), Ok(z) if &z == *y))
            .count();
        Ok((bad == 0, format!("{samples} points, {bad} violations")))
    })
}

fn tuple_violation(ps: &HeightSet, b: u64, a: &[i64; 10]) -> Option<String> {
    let t = CoxTuple::from_i64(*a);
    if pluecker_residuals(&t).iter().any(|r| !r.is_zero()) {
        return Some(format!("{t}: Pluecker residual"));
    }
    if !coprimality_check(&t) {
        return Some(format!("{t}: coprimality"));
    }
    let g = ps
        .forms()
        .iter()
        .try_fold(BigInt::zero(), |g, p| lift_ptilde(p, &t).map(|v| num_integer::Integer::gcd(&g, &v)));
    if !matches!(g, Ok(ref g) if g.is_one()) {
        return Some(format!("{t}: gcd of lifted forms"));
    }
    let y = match blow_down(&t) {
        Ok(y) => y,
        Err(e) => return Some(format!("{t}: blow-down {e}")),
    };
    if y.is_on_lines() || !matches!(is_integral(&y), Ok(true)) {
        return Some(format!("{t}: image {y} not integral off the lines"));
    }
    match (height_cox(ps, &t), height_projective(ps, &y)) {
        (Ok(h), Ok(q)) if BigRational::from_integer(h.clone()) == q && h <= BigInt::from(b) => None,
        _ => Some(format!("{t}: height mismatch")),
    }
}

/// Every enumerated tuple up to `b` (P1) is a valid torsor point mapping to
/// an integral point of the same height, and the images are distinct.
pub fn parameterization_invariants(b: u64) -> Check {
    timed("parameterization_invariants", || {
        let ps = HeightSet::p1();
        let tuples = collect_points(b, &ps)?;
        let violation = tuples.par_iter().find_map_any(|a| tuple_violation(&ps, b, a));
        if let Some(v) = violation {
            return Ok((false, v));
        }
        let mut images: Vec<[i64; 3]> = tuples
            .par_iter()
            .map(|a| blow_down(&CoxTuple::from_i64(*a)).map(|y| y.to_i64().expect("small point")))
            .collect::<Result<_, _>>()?;
        images.par_sort_unstable();
        let before = images.len();
        images.dedup();
        if images.len() != before {
            return Ok((false, format!("{} repeated images", before - images.len())));
        }
        Ok((true, format!("{before} tuples up to B={b}, zero violations")))
    })
}

pub fn alpha_exactness() -> Check {
    timed("alpha_exact", || {
        let a = alpha_exact()?;
        let want = BigRational::new(17.into(), 576.into());
        Ok((a == want, format!("{a}")))
    })
}

pub fn alpha_mc(samples: u64) -> Check {
    timed("alpha_monte_carlo", || {
        let exact = to_f64(&alpha_exact()?);
        let m = alpha_monte_carlo(samples, MC_SEED);
        let z = (m.estimate - exact).abs() / m.sigma;
        Ok((z <= 4.0, format!("{:.6} +/- {:.6}, {z:.2} sigma, {samples} samples", m.estimate, m.sigma)))
    })
}

pub fn archimedean_width(tol: f64) -> Check {
    timed("archimedean_width", || {
        let w = archimedean_density(&HeightSet::p1(), tol)?;
        let width = to_f64(&w.width());
        Ok((width <= tol, format!("omega in {w}, width {width:.2e} <= {tol:.0e}")))
    })
}

/// For P1 the density has the closed form `12 ln 2`.
pub fn archimedean_closed_form(tol: f64) -> Check {
    timed("archimedean_closed_form", || {
        let w = archimedean_density(&HeightSet::p1(), tol)?;
        let exact = 12.0 * std::f64::consts::LN_2;
        let inside = w.intersects(&Interval::from_f64(exact - 1e-14, exact + 1e-14));
        Ok((inside, format!("omega(p1) {w} vs 12 ln 2 = {exact:.15}")))
    })
}

pub fn archimedean_mc(tol: f64, samples: u64) -> Check {
    timed("archimedean_monte_carlo", || {
        let ps = HeightSet::p1();
        let area = region_area(&ps, 1.0, tol / 2.0)?.area;
        let h = containment_box(&ps, 1.0)?;
        let m = region_area_monte_carlo(&ps, 1.0, h, samples, MC_SEED)?;
        let z = (m.estimate - area.midpoint_f64()).abs() / m.sigma;
        Ok((z <= 4.0, format!("box [-{h},{h}]^2, {:.6} +/- {:.6}, {z:.2} sigma", m.estimate, m.sigma)))
    })
}

pub fn archimedean_homogeneity(tol: f64) -> Check {
    timed("archimedean_homogeneity", || {
        let ps = HeightSet::p1();
        let a1 = region_area(&ps, 1.0, tol)?.area;
        let a4 = region_area(&ps, 4.0, 4.0 * tol)?.area;
        let scaled = a1.scale(&BigRational::from_integer(4.into()));
        let gap = to_f64(&(&a4.lo - &scaled.hi)).max(to_f64(&(&scaled.lo - &a4.hi)));
        Ok((a4.intersects(&scaled), format!("area(4) {a4} vs 4 area(1) {scaled}, gap {gap:.1e}")))
    })
}

pub fn archimedean_monotone(tol: f64) -> Check {
    timed("archimedean_monotone", || {
        let w1 = archimedean_density(&HeightSet::p1(), tol)?;
        let w3 = archimedean_density(&HeightSet::p3(), tol)?;
        Ok((w3.lo <= w1.hi, format!("omega(p3) {w3} <= omega(p1) {w1}")))
    })
}

pub fn golden_counts(limit: u64) -> Check {
    timed("golden_counts", || {
        let rows: Vec<(u64, u64)> = golden::series_p1().into_iter().filter(|&(b, _)| b <= limit).collect();
        let bounds: Vec<u64> = rows.iter().map(|r| r.0).collect();
        let got = count_series(&bounds, &HeightSet::p1())?;
        for ((b, want), r) in rows.iter().zip(&got) {
            if r.count != *want {
                return Ok((false, format!("B={b}: {} != golden {want}", r.count)));
            }
        }
        Ok((true, format!("{} rows with B <= {limit} recomputed", rows.len())))
    })
}

pub fn golden_kappa() -> Check {
    timed("golden_kappa", || {
        for (id, want) in golden::kappa() {
            let set = HeightSetId::parse(&id)
                .and_then(HeightSet::builtin)
                .ok_or_else(|| anyhow::anyhow!("unknown set {id}"))?;
            if set.kappa() != want {
                return Ok((false, format!("{id}: {} != golden {want}", set.kappa())));
            }
        }
        Ok((true, "p1, p2, p3".into()))
    })
}

pub fn golden_constants() -> Check {
    timed("golden_constants", || {
        let want = golden::constants_p1();
        let got = leading_constant(&HeightSet::p1(), want.prime_cutoff, want.quadrature_tolerance)?.to_json(want.precision);
        Ok((got == want, format!("cutoff {}, tol {:.0e}, c in [{}, {}]", want.prime_cutoff, want.quadrature_tolerance, got.c[0], got.c[1])))
    })
}

/// The checks of one suite, in a fixed order.
pub fn run(suite: Suite, opts: &Options) -> Vec<Check> {
    use Suite::*;
    let want = |s: Suite| suite == All || suite == s;
    let mut out = Vec::new();
    if want(Cross) {
        out.push(cross_method_counts(&opts.cross_bounds));
    }
    if want(Ff) {
        out.push(ff_counts(&opts.primes, &opts.naive_primes));
    }
    if want(Padic) {
        out.push(padic_density(&opts.primes, opts.euler_exponent));
    }
    if want(Gcd) {
        out.push(gcd_identity(opts.gcd_samples));
    }
    if want(Roundtrip) {
        out.push(round_trip(opts.roundtrip_samples));
    }
    if want(Invariants) {
        out.push(parameterization_invariants(opts.invariants_bound));
    }
    if want(Alpha) {
        out.push(alpha_exactness());
        out.push(alpha_mc(opts.mc_samples));
    }
    if want(Archimedean) {
        out.push(archimedean_width(opts.quad_tol));
        out.push(archimedean_closed_form(opts.quad_tol));
        out.push(archimedean_mc(opts.quad_tol, opts.mc_samples));
        out.push(archimedean_homogeneity(opts.quad_tol));
        out.push(archimedean_monotone(opts.quad_tol));
    }
    if want(Golden) {
        out.push(golden_counts(opts.golden_recount_limit));
        out.push(golden_kappa());
        out.push(golden_constants());
    }
    out
}
