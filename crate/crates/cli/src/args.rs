//! Flag definitions.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use dp5_core::heights::{HeightSet, HeightSetFile, HeightSetId};

use crate::{CliResult, Failure};

const AFTER_HELP: &str = "\
Predictions use the natural logarithm: prediction = c * B * (ln B)^4, with c
the interval reported by `constants`.

Exit codes: 0 success, 1 check failure or runtime error, 2 usage error.";

#[derive(Debug, Parser)]
#[command(
    name = "dp5",
    version,
    about = "Integral points of bounded log-anticanonical height on the split quintic del Pezzo surface",
    after_help = AFTER_HELP
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Height bound B.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub height_bound: Option<u64>,

    /// Comma-separated ascending list of height bounds.
    #[arg(long, global = true, value_delimiter = ',', value_parser = clap::value_parser!(u64).range(1..))]
    pub grid: Option<Vec<u64>>,

    /// Height set: p1, p2, p3 or file:<path> (JSON).
    #[arg(long, global = true, default_value = "p1", value_parser = parse_height_set)]
    pub height_set: HeightSetArg,

    /// Counting method.
    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Torsor)]
    pub method: MethodArg,

    /// Largest prime in the exact part of the Euler product (at least 11).
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub prime_cutoff: u64,

    /// Width of the archimedean density enclosure.
    #[arg(long, global = true, default_value_t = 1e-6, value_parser = parse_positive)]
    pub quad_tol: f64,

    /// Monte-Carlo samples for the oracle checks.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub mc_samples: Option<u64>,

    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// JSON file caching exact counts across runs.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count N(B) for one bound (CSV).
    Count,
    /// Count N(B) over a grid of bounds (CSV).
    Series,
    /// Report every factor of the leading constant (JSON).
    Constants,
    /// Compare N(B) with c B (ln B)^4 over a grid (CSV).
    Compare,
    /// Run the invariant suites; exit 1 naming the first failing check.
    Verify(VerifyArgs),
    /// Print the exact cone constant and its Monte-Carlo estimate.
    Alpha,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Which block of checks to run.
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,

    /// Exponent of (1 - 1/p) in the local factor tested by the p-adic check.
    #[arg(long, hide = true, default_value_t = 4)]
    pub euler_exponent: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Cross,
    Ff,
    Padic,
    Gcd,
    Roundtrip,
    Invariants,
    Alpha,
    Archimedean,
    Golden,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Torsor,
    Direct,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeightSetArg {
    Builtin(HeightSetId),
    File(PathBuf),
}

fn parse_height_set(s: &str) -> Result<HeightSetArg, String> {
    if let Some(path) = s.strip_prefix("file:") {
        if path.is_empty() {
            return Err("empty path after file:".into());
        }
        return Ok(HeightSetArg::File(PathBuf::from(path)));
    }
    match HeightSetId::parse(s) {
        Some(id) if id != HeightSetId::Custom => Ok(HeightSetArg::Builtin(id)),
        _ => Err(format!("expected p1, p2, p3 or file:<path>, got {s:?}")),
    }
}

fn parse_positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a positive decimal, got {s:?}")),
    }
}

impl HeightSetArg {
    pub fn load(&self) -> CliResult<HeightSet> {
        match self {
            HeightSetArg::Builtin(id) => Ok(HeightSet::builtin(*id).expect("built-in id")),
            HeightSetArg::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
                let file: HeightSetFile = serde_json::from_str(&text)
                    .map_err(|e| Failure::Usage(format!("malformed height set {}: {e}", path.display())))?;
                Ok(HeightSet::from_file(&file)?)
            }
        }
    }
}

impl Cli {
    /// The grid, or the single height bound; validated ascending.
    pub fn bounds(&self) -> CliResult<Vec<u64>> {
        let bounds = match (&self.grid, self.height_bound) {
            (Some(g), _) => g.clone(),
            (None, Some(b)) => vec![b],
            (None, None) => return Err(Failure::Usage("either --grid or --height-bound is required".into())),
        };
        if bounds.is_empty() {
            return Err(Failure::Usage("empty grid".into()));
        }
        if bounds.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Failure::Usage("grid must be strictly ascending".into()));
        }
        Ok(bounds)
    }
}
