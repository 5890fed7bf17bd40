//! The `count`, `series`, `constants`, `compare` and `alpha` commands.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::time::Instant;

use dp5_core::constants::interval::{decimal_ceil, decimal_floor, to_f64, Interval};
use dp5_core::constants::report::DEFAULT_DIGITS;
use dp5_core::constants::{alpha_exact, alpha_monte_carlo, leading_constant};
use dp5_core::enumerator::{count_direct, count_series, CountRecord, Method};
use dp5_core::heights::HeightSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::args::{Cli, MethodArg};
use crate::cache::Cache;
use crate::{CliResult, Failure};

/// Seed shared by every Monte-Carlo run, for reproducible output.
pub const MC_SEED: u64 = 0x5eed;

/// Default Monte-Carlo sample count of the `alpha` command.
pub const ALPHA_MC_SAMPLES: u64 = 10_000_000;

/// Default grid of `series` and `compare`.
pub const DEFAULT_GRID: [u64; 5] = [100, 1_000, 10_000, 100_000, 1_000_000];

pub fn output(cli: &Cli) -> CliResult<Box<dyn Write>> {
    Ok(match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn method(cli: &Cli) -> Method {
    match cli.method {
        MethodArg::Torsor => Method::Torsor,
        MethodArg::Direct => Method::Direct,
    }
}

/// Counts for ascending `bounds`, reusing cached values. Missing bounds are
/// computed in one torsor pass, or one direct scan each.
pub fn counts(ps: &HeightSet, bounds: &[u64], method: Method, cache: &mut Cache) -> CliResult<Vec<CountRecord>> {
    let key = ps.key();
    let missing: Vec<u64> = bounds.iter().copied().filter(|&b| cache.get(b, &key, method).is_none()).collect();
    let mut fresh = match method {
        Method::Torsor => count_series(&missing, ps)?,
        Method::Direct => missing.iter().map(|&b| count_direct(b, ps)).collect::<Result<_, _>>()?,
    };
    for r in &fresh {
        cache.insert(r.bound, &key, method, r.count);
    }
    let mut out = Vec::with_capacity(bounds.len());
    for &b in bounds {
        match cache.get(b, &key, method) {
            Some(count) if !missing.contains(&b) => out.push(CountRecord {
                bound: b,
                count,
                height_set_id: key.clone(),
                method,
                elapsed_seconds: 0.0,
            }),
            _ => {
                let i = fresh.iter().position(|r| r.bound == b).expect("computed");
                out.push(fresh.swap_remove(i));
            }
        }
    }
    Ok(out)
}

fn write_counts(cli: &Cli, records: &[CountRecord]) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(output(cli)?);
    w.write_record(["B", "count", "height_set", "method", "seconds"])?;
    for r in records {
        w.write_record([
            r.bound.to_string(),
            r.count.to_string(),
            r.height_set_id.clone(),
            r.method.to_string(),
            format!("{:.3}", r.elapsed_seconds),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn count(cli: &Cli) -> CliResult<()> {
    let b = cli
        .height_bound
        .ok_or_else(|| Failure::Usage("count needs --height-bound".into()))?;
    let ps = cli.height_set.load()?;
    let mut cache = Cache::open(cli.cache.as_deref())?;
    let records = counts(&ps, &[b], method(cli), &mut cache)?;
    cache.save()?;
    write_counts(cli, &records)
}

fn grid(cli: &Cli) -> CliResult<Vec<u64>> {
    if cli.grid.is_none() && cli.height_bound.is_none() {
        return Ok(DEFAULT_GRID.to_vec());
    }
    cli.bounds()
}

pub fn series(cli: &Cli) -> CliResult<()> {
    let bounds = grid(cli)?;
    let ps = cli.height_set.load()?;
    let mut cache = Cache::open(cli.cache.as_deref())?;
    let records = counts(&ps, &bounds, method(cli), &mut cache)?;
    cache.save()?;
    write_counts(cli, &records)
}

pub fn constants(cli: &Cli) -> CliResult<()> {
    let ps = cli.height_set.load()?;
    let report = leading_constant(&ps, cli.prime_cutoff, cli.quad_tol)?;
    let mut w = output(cli)?;
    serde_json::to_writer_pretty(&mut w, &report.to_json(DEFAULT_DIGITS))?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

/// Enclosure of `ln B`: the libm result is within one ulp of the true value.
fn ln_enclosure(b: u64) -> Interval {
    let l = (b as f64).ln();
    let slack = 4.0 * f64::EPSILON * l.abs();
    Interval::from_f64((l - slack).max(0.0), l + slack)
}

/// `c B (ln B)^4` as an interval.
pub fn prediction(c: &Interval, b: u64) -> Interval {
    let l = ln_enclosure(b);
    let bb = BigRational::from_integer(BigInt::from(b));
    Interval::new(&c.lo * &bb * l.lo.pow(4), &c.hi * &bb * l.hi.pow(4))
}

pub fn compare(cli: &Cli) -> CliResult<()> {
    let bounds = grid(cli)?;
    let ps = cli.height_set.load()?;
    let report = leading_constant(&ps, cli.prime_cutoff, cli.quad_tol)?;
    let mut cache = Cache::open(cli.cache.as_deref())?;
    let records = counts(&ps, &bounds, method(cli), &mut cache)?;
    cache.save()?;
    let mut w = csv::Writer::from_writer(output(cli)?);
    w.write_record(["B", "count", "prediction_lo", "prediction_hi", "ratio_lo", "ratio_hi"])?;
    for r in &records {
        let p = prediction(&report.c, r.bound);
        let n = BigRational::from_integer(BigInt::from(r.count));
        let ratio_hi = if p.lo.is_zero() { "inf".to_string() } else { decimal_ceil(&(&n / &p.lo), 9) };
        let ratio_lo = if p.hi.is_zero() { "inf".to_string() } else { decimal_floor(&(&n / &p.hi), 9) };
        w.write_record([
            r.bound.to_string(),
            r.count.to_string(),
            decimal_floor(&p.lo, 3),
            decimal_ceil(&p.hi, 3),
            ratio_lo,
            ratio_hi,
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn alpha(cli: &Cli) -> CliResult<()> {
    let start = Instant::now();
    let exact = alpha_exact()?;
    let exact_seconds = start.elapsed().as_secs_f64();
    let samples = cli.mc_samples.unwrap_or(ALPHA_MC_SAMPLES);
    let mc = alpha_monte_carlo(samples, MC_SEED);
    let target = to_f64(&exact);
    let agrees = mc.agrees_with(target, 4.0);
    let mut w = output(cli)?;
    writeln!(w, "alpha = {}/{}", exact.numer(), exact.denom())?;
    writeln!(w, "alpha_decimal = {}", decimal_floor(&exact, 15))?;
    writeln!(w, "exact_seconds = {exact_seconds:.3}")?;
    writeln!(
        w,
        "monte_carlo = {:.6} +/- {:.6} ({} samples, {:.2} sigma)",
        mc.estimate,
        mc.sigma,
        mc.samples,
        (mc.estimate - target).abs() / mc.sigma
    )?;
    w.flush()?;
    if !agrees {
        return Err(Failure::Check("alpha_monte_carlo".into()));
    }
    Ok(())
}
