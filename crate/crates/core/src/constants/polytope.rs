//! Exact volumes of rational polytopes and the effective cone constant.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// The halfspace `normal · x <= offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halfspace {
    pub normal: Vec<BigRational>,
    pub offset: BigRational,
}

impl Halfspace {
    pub fn new(normal: Vec<BigRational>, offset: BigRational) -> Self {
        Self { normal, offset }
    }

    pub fn from_i64(normal: &[i64], offset: i64) -> Self {
        Self {
            normal: normal.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
            offset: BigRational::from_integer(offset.into()),
        }
    }

    fn to_f64(&self) -> (Vec<f64>, f64) {
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        (self.normal.iter().map(f).collect(), f(&self.offset))
    }
}

/// Volume of `{t >= 0 : h(t) for h in halfspaces}`.
pub fn polytope_volume(halfspaces: &[Halfspace]) -> Result<BigRational> {
    let d = halfspaces.first().map(|h| h.normal.len()).ok_or_else(|| {
        Error::InvalidArgument("at least one halfspace is needed to fix the dimension".into())
    })?;
    let mut all = halfspaces.to_vec();
    for i in 0..d {
        let mut n = vec![0i64; d];
        n[i] = -1;
        all.push(Halfspace::from_i64(&n, 0));
    }
    volume(d, &all)
}

/// Volume of the H-polytope `{x in R^d : h(x) for h in halfspaces}`
/// by Lasserre's facet recursion
/// `vol_d(P) = (1/d) sum_i b_i/|a_i| vol_{d-1}(F_i)`, with every facet
/// projected along a coordinate (which rescales the facet measure by
/// `|a_i|/|a_ik|`).
pub fn volume(d: usize, halfspaces: &[Halfspace]) -> Result<BigRational> {
    if d == 0 {
        return Err(Error::InvalidArgument("dimension must be positive".into()));
    }
    if let Some(h) = halfspaces.iter().find(|h| h.normal.len() != d) {
        return Err(Error::InvalidArgument(format!(
            "halfspace of dimension {} in a {d}-dimensional problem",
            h.normal.len()
        )));
    }
    let cons: Vec<(Vec<BigRational>, BigRational)> =
        halfspaces.iter().map(|h| (h.normal.clone(), h.offset.clone())).collect();
    lasserre(cons, d)
}

type Constraint = (Vec<BigRational>, BigRational);

/// Drops trivial constraints and keeps the tightest one per direction.
/// Returns `None` for an empty set.
fn normalize(cons: Vec<Constraint>) -> Option<Vec<Constraint>> {
    let mut best: HashMap<Vec<BigRational>, BigRational> = HashMap::new();
    let mut order = Vec::new();
    for (a, b) in cons {
        let Some(lead) = a.iter().find(|c| !c.is_zero()).map(|c| c.abs()) else {
            if b.is_negative() {
                return None;
            }
            continue;
        };
        let dir: Vec<BigRational> = a.iter().map(|c| c / &lead).collect();
        let off = b / &lead;
        match best.get_mut(&dir) {
            Some(cur) => {
                if off < *cur {
                    *cur = off;
                }
            }
            None => {
                order.push(dir.clone());
                best.insert(dir, off);
            }
        }
    }
    Some(
        order
            .into_iter()
            .map(|dir| {
                let off = best[&dir].clone();
                (dir, off)
            })
            .collect(),
    )
}

fn lasserre(cons: Vec<Constraint>, d: usize) -> Result<BigRational> {
    let Some(cons) = normalize(cons) else { return Ok(BigRational::zero()) };
    if d == 1 {
        let (mut lo, mut hi): (Option<BigRational>, Option<BigRational>) = (None, None);
        for (a, b) in &cons {
            let v = b / &a[0];
            if a[0].is_positive() {
                hi = Some(hi.map_or(v.clone(), |h| h.min(v)));
            } else {
                lo = Some(lo.map_or(v.clone(), |l| l.max(v)));
            }
        }
        return match (lo, hi) {
            (Some(l), Some(h)) => Ok(if h > l { h - l } else { BigRational::zero() }),
            _ => Err(Error::Unbounded),
        };
    }
    let mut total = BigRational::zero();
    for (i, (ai, bi)) in cons.iter().enumerate() {
        let k = ai.iter().position(|c| !c.is_zero()).expect("normalized constraints are nonzero");
        let aik = &ai[k];
        let sub: Vec<Constraint> = cons
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, (aj, bj))| {
                let f = &aj[k] / aik;
                let normal = (0..d).filter(|&l| l != k).map(|l| &aj[l] - &f * &ai[l]).collect();
                (normal, bj - &f * bi)
            })
            .collect();
        let v = lasserre(sub, d - 1)?;
        total += bi / aik.abs() * v;
    }
    Ok(total / BigRational::from_integer(BigInt::from(d)))
}

/// The polytope `{t in R^4_{>=0} : 2t_i + 2t_j - t_3 - t_4 <= 1}` over the six
/// pairs `{i, j}` of `{1, 2, 3, 4}`. Since `2t_1 <= 1 - |t_3 - t_4|`, it lies in
/// `[0,1/2]² x [0,1]²`.
pub fn alpha_polytope() -> Vec<Halfspace> {
    let mut hs = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let mut n = [0i64; 4];
            n[i] += 2;
            n[j] += 2;
            n[2] -= 1;
            n[3] -= 1;
            hs.push(Halfspace::from_i64(&n, 1));
        }
    }
    hs
}

/// `alpha = vol / 2 = 17/576`.
pub fn alpha_exact() -> Result<BigRational> {
    Ok(polytope_volume(&alpha_polytope())? / BigRational::from_integer(2.into()))
}

/// A Monte Carlo estimate with its standard error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    pub sigma: f64,
    pub samples: u64,
}

impl McEstimate {
    /// Hit-or-miss estimate: `hits` of `samples` in a box of volume `box_volume`.
    pub fn from_hits(hits: u64, samples: u64, box_volume: f64) -> Self {
        let p = hits as f64 / samples as f64;
        Self {
            estimate: box_volume * p,
            sigma: box_volume * (p * (1.0 - p) / samples as f64).sqrt(),
            samples,
        }
    }

    /// `|estimate - value| <= k sigma`.
    pub fn agrees_with(&self, value: f64, k: f64) -> bool {
        (self.estimate - value).abs() <= k * self.sigma
    }
}

/// Hit-or-miss volume of `{t >= 0 : ...}` inside the box `prod [0, upper_i]`.
pub fn polytope_volume_monte_carlo(halfspaces: &[Halfspace], upper: &[f64], samples: u64, seed: u64) -> McEstimate {
    let hs: Vec<(Vec<f64>, f64)> = halfspaces.iter().map(Halfspace::to_f64).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = vec![0.0; upper.len()];
    let mut hits = 0;
    for _ in 0..samples {
        for (v, &u) in x.iter_mut().zip(upper) {
            *v = rng.random::<f64>() * u;
        }
        let inside = hs
            .iter()
            .all(|(n, b)| n.iter().zip(&x).map(|(a, v)| a * v).sum::<f64>() <= *b);
        hits += inside as u64;
    }
    McEstimate::from_hits(hits, samples, upper.iter().product())
}

/// Monte Carlo estimate of `alpha` over the box `[0,1/2]² x [0,1]²`.
pub fn alpha_monte_carlo(samples: u64, seed: u64) -> McEstimate {
    let m = polytope_volume_monte_carlo(&alpha_polytope(), &[0.5, 0.5, 1.0, 1.0], samples, seed);
    McEstimate { estimate: m.estimate / 2.0, sigma: m.sigma / 2.0, samples }
}
