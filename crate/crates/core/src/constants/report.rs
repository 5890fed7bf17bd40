//! Assembly of the leading constant.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::archimedean::archimedean_density;
use super::euler::euler_product;
use super::interval::Interval;
use super::polytope::alpha_exact;
use crate::error::Result;
use crate::heights::HeightSet;

/// Power of `log B` in the predicted asymptotic `N(B) ~ c B (log B)^4`.
pub const LOG_EXPONENT: u32 = 4;

/// Decimal digits used when serializing intervals.
pub const DEFAULT_DIGITS: usize = 15;

/// Every factor of the leading constant, each an honest enclosure.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstantReport {
    pub height_set: String,
    pub alpha: BigRational,
    pub omega_archimedean: Interval,
    pub euler_value: Interval,
    pub c: Interval,
    pub log_exponent: u32,
    pub prime_cutoff: u64,
    pub quadrature_tolerance: f64,
}

/// Serialized form: rationals as `"num/den"`, intervals as outward-rounded
/// decimal strings with `precision` fractional digits.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstantReportJson {
    pub height_set: String,
    pub alpha: String,
    pub omega_archimedean: [String; 2],
    pub euler_value: [String; 2],
    pub c: [String; 2],
    pub log_exponent: u32,
    pub prime_cutoff: u64,
    pub quadrature_tolerance: f64,
    pub precision: usize,
}

fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn interval_strings(i: &Interval, digits: usize) -> [String; 2] {
    [i.lo_decimal(digits), i.hi_decimal(digits)]
}

impl ConstantReport {
    pub fn to_json(&self, digits: usize) -> ConstantReportJson {
        ConstantReportJson {
            height_set: self.height_set.clone(),
            alpha: rational_string(&self.alpha),
            omega_archimedean: interval_strings(&self.omega_archimedean, digits),
            euler_value: interval_strings(&self.euler_value, digits),
            c: interval_strings(&self.c, digits),
            log_exponent: self.log_exponent,
            prime_cutoff: self.prime_cutoff,
            quadrature_tolerance: self.quadrature_tolerance,
            precision: digits,
        }
    }
}

/// `c = alpha · omega_inf · prod_p omega_p` as an interval.
pub fn leading_constant(ps: &HeightSet, prime_cutoff: u64, tol: f64) -> Result<ConstantReport> {
    let alpha = alpha_exact()?;
    let euler_value = euler_product(prime_cutoff)?;
    let omega = archimedean_density(ps, tol)?;
    let c = omega.mul_nonneg(&euler_value).scale(&alpha);
    Ok(ConstantReport {
        height_set: ps.key(),
        alpha,
        omega_archimedean: omega,
        euler_value,
        c,
        log_exponent: LOG_EXPONENT,
        prime_cutoff,
        quadrature_tolerance: tol,
    })
}
