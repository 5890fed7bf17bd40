//! Reference outputs kept under version control. They are only ever
//! compared against, never rewritten by the tool.

use dp5_core::constants::ConstantReportJson;

/// `B,count` for the P1 height set.
pub const SERIES_P1: &str = include_str!("../golden/series_p1.csv");
/// `height_set,kappa` for the built-in sets.
pub const KAPPA: &str = include_str!("../golden/kappa.csv");
/// `dp5 constants` for P1 at the default cutoff and tolerance.
pub const CONSTANTS_P1: &str = include_str!("../golden/constants_p1.json");

fn rows(text: &str) -> Vec<(String, u64)> {
    text.lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let (k, v) = l.split_once(',').expect("two columns");
            (k.trim().to_string(), v.trim().parse().expect("integer value"))
        })
        .collect()
}

pub fn series_p1() -> Vec<(u64, u64)> {
    rows(SERIES_P1)
        .into_iter()
        .map(|(b, n)| (b.parse().expect("integer bound"), n))
        .collect()
}

pub fn kappa() -> Vec<(String, u64)> {
    rows(KAPPA)
}

pub fn constants_p1() -> ConstantReportJson {
    serde_json::from_str(CONSTANTS_P1).expect("golden constants parse")
}
