//! Factors of the predicted leading constant `c` in `N(B) ~ c B (log B)^4`:
//! the cone constant `alpha`, the real density, and the Euler product, with
//! finite-field point counts as an independent check of the local factors.

pub mod archimedean;
pub mod euler;
pub mod finite_field;
pub mod interval;
pub mod polytope;
pub mod report;

pub use archimedean::{archimedean_density, region_area, region_area_monte_carlo, RegionEnclosure};
pub use euler::{euler_local_factor, euler_partial_product, euler_product};
pub use finite_field::{ff_surface_count, ff_surface_count_naive, padic_density_check, FfCount};
pub use interval::Interval;
pub use polytope::{alpha_exact, alpha_monte_carlo, polytope_volume, Halfspace, McEstimate};
pub use report::{leading_constant, ConstantReport, ConstantReportJson};
