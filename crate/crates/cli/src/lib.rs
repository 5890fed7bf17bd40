//! Command-line front end for `dp5-core`: counting runs, constant reports,
//! the count-versus-prediction table and the verification suites.

pub mod args;
pub mod cache;
pub mod commands;
pub mod golden;
pub mod verify;

use std::fmt;

/// How a command failed; decides the exit code.
#[derive(Debug)]
pub enum Failure {
    /// Invalid flags or inputs (exit 2).
    Usage(String),
    /// A verification check failed (exit 1).
    Check(String),
    /// Anything else (exit 1).
    Runtime(anyhow::Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Check(_) | Failure::Runtime(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Check(m) => write!(f, "check failed: {m}"),
            Failure::Runtime(e) => write!(f, "error: {e:#}"),
        }
    }
}

impl From<dp5_core::Error> for Failure {
    fn from(e: dp5_core::Error) -> Self {
        use dp5_core::Error as E;
        match e {
            E::InvalidArgument(_)
            | E::BoundTooLarge(_)
            | E::CutoffTooSmall(_)
            | E::InvalidHeightSet(_)
            | E::NotSpanning(_)
            | E::FormNotVanishing
            | E::NotPrime(_)
            | E::PrimeOutOfRange(_) => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Runtime(e.into())
    }
}

pub type CliResult<T> = std::result::Result<T, Failure>;
