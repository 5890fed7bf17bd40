//! Exact counting of integral points of bounded log-anticanonical height on
//! the split quintic del Pezzo surface over ℚ (the blow-up of P² in
//! (1:0:0), (0:1:0), (0:0:1), (1:1:1)) with boundary the line A₁₂, and
//! computation of the predicted leading constant `c` in `N(B) ~ c B (log B)^4`.
//!
//! * [`heights`]: height sets of quadratic forms and the height on P²(ℚ) and on
//!   torsor coordinates.
//! * [`torsor`]: Cox coordinates, Plücker equations, coprimality, charts.
//! * [`enumerator`]: the torsor-driven count and an independent direct search.
//! * [`constants`]: α(X), Euler product, archimedean density, F_p point counts.

pub mod arith;
pub mod constants;
pub mod enumerator;
pub mod error;
pub mod heights;
mod linalg;
pub mod torsor;

pub use error::{Error, Result};

/// Identifies the counting algorithm in cache keys; bump when the
/// enumeration logic changes.
pub const CODE_VERSION: &str = concat!("dp5-core-", env!("CARGO_PKG_VERSION"), "-enum1");
