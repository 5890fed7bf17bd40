//! Cox coordinates on the universal torsor: the five Plücker equations, the
//! coprimality schema, dependent coordinates, the blow-down map and its
//! inverse chart, and sign-orbit canonicalization.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::heights::ProjectivePoint;

pub const A1: usize = 0;
pub const A2: usize = 1;
pub const A3: usize = 2;
pub const A4: usize = 3;
pub const A12: usize = 4;
pub const A13: usize = 5;
pub const A14: usize = 6;
pub const A23: usize = 7;
pub const A24: usize = 8;
pub const A34: usize = 9;

/// Coordinate names in serialization order.
pub const COORD_NAMES: [&str; 10] = ["a1", "a2", "a3", "a4", "a12", "a13", "a14", "a23", "a24", "a34"];

/// Pairs of coordinates required to be coprime: `(a_i, a_j)` for `i != j`,
/// `(a_i, a_jk)` for `i` not in `{j,k}`, and `(a_ij, a_ik)` for `j != k`.
/// The three pairs with disjoint double indices are unconstrained.
pub const COPRIMALITY_SCHEMA: [(usize, usize); 30] = [
    (A1, A2), (A1, A3), (A1, A4), (A2, A3), (A2, A4), (A3, A4),
    (A1, A23), (A1, A24), (A1, A34),
    (A2, A13), (A2, A14), (A2, A34),
    (A3, A12), (A3, A14), (A3, A24),
    (A4, A12), (A4, A13), (A4, A23),
    (A12, A13), (A12, A14), (A12, A23), (A12, A24),
    (A13, A14), (A13, A23), (A13, A34),
    (A14, A24), (A14, A34),
    (A23, A24), (A23, A34),
    (A24, A34),
];

/// The ten Cox coordinates `(a1, a2, a3, a4, a12, a13, a14, a23, a24, a34)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxTuple {
    a: [BigInt; 10],
}

impl CoxTuple {
    pub fn new(a: [BigInt; 10]) -> Self {
        Self { a }
    }

    pub fn from_i64(a: [i64; 10]) -> Self {
        Self { a: a.map(BigInt::from) }
    }

    pub fn coords(&self) -> &[BigInt; 10] {
        &self.a
    }

    pub fn get(&self, i: usize) -> &BigInt {
        &self.a[i]
    }

    pub fn to_i64(&self) -> Option<[i64; 10]> {
        let mut out = [0i64; 10];
        for (o, v) in out.iter_mut().zip(&self.a) {
            *o = v.to_i64()?;
        }
        Some(out)
    }

    /// All ten coordinates nonzero.
    pub fn is_on_v(&self) -> bool {
        self.a.iter().all(|v| !v.is_zero())
    }

    /// `a1, a2, a3, a4 > 0` and `a12 > 0`.
    pub fn is_canonical(&self) -> bool {
        [A1, A2, A3, A4, A12].iter().all(|&i| self.a[i].is_positive())
    }

    /// `|a12| = 1`.
    pub fn is_integral(&self) -> bool {
        self.a[A12].abs().is_one()
    }

    fn first_zero(&self) -> Option<&'static str> {
        self.a.iter().position(|v| v.is_zero()).map(|i| COORD_NAMES[i])
    }
}

impl fmt::Display for CoxTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.a.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// The five torsor equations, in the order
/// `a4a14-a3a13+a2a12`, `a4a24-a3a23+a1a12`, `a4a34-a2a23+a1a13`,
/// `a3a34-a2a24+a1a14`, `a12a34-a13a24+a23a14`.
pub fn pluecker_residuals(t: &CoxTuple) -> [BigInt; 5] {
    let a = &t.a;
    [
        &a[A4] * &a[A14] - &a[A3] * &a[A13] + &a[A2] * &a[A12],
        &a[A4] * &a[A24] - &a[A3] * &a[A23] + &a[A1] * &a[A12],
        &a[A4] * &a[A34] - &a[A2] * &a[A23] + &a[A1] * &a[A13],
        &a[A3] * &a[A34] - &a[A2] * &a[A24] + &a[A1] * &a[A14],
        &a[A12] * &a[A34] - &a[A13] * &a[A24] + &a[A23] * &a[A14],
    ]
}

/// True if every residual vanishes.
pub fn satisfies_pluecker(t: &CoxTuple) -> bool {
    pluecker_residuals(t).iter().all(Zero::is_zero)
}

/// Solves the torsor equations for `(a13, a14, a24)` given the other seven
/// coordinates, provided `a3 a23 ≡ a1 a12 (mod a4)` and
/// `a4 a34 ≡ a2 a23 (mod a1)`.
#[allow(clippy::too_many_arguments)]
pub fn dependent_coordinates(
    a1: &BigInt,
    a2: &BigInt,
    a3: &BigInt,
    a4: &BigInt,
    a12: &BigInt,
    a23: &BigInt,
    a34: &BigInt,
) -> Result<(BigInt, BigInt, BigInt)> {
    if a1.is_zero() {
        return Err(Error::ZeroCoordinate("a1"));
    }
    if a4.is_zero() {
        return Err(Error::ZeroCoordinate("a4"));
    }
    if !a1.gcd(a4).is_one() {
        return Err(Error::InvalidArgument("gcd(a1, a4) must be 1".into()));
    }
    let (a13, r13) = (a2 * a23 - a4 * a34).div_rem(a1);
    let (a24, r24) = (a3 * a23 - a1 * a12).div_rem(a4);
    if !r13.is_zero() || !r24.is_zero() {
        return Err(Error::NoSolution);
    }
    // Exact once both congruences hold and gcd(a1, a4) = 1.
    let (a14, r14) = (a2 * a3 * a23 - a3 * a4 * a34 - a1 * a2 * a12).div_rem(&(a1 * a4));
    if !r14.is_zero() {
        return Err(Error::PlueckerViolation("a14 is not integral".into()));
    }
    let t = CoxTuple::new([
        a1.clone(), a2.clone(), a3.clone(), a4.clone(), a12.clone(),
        a13.clone(), a14.clone(), a23.clone(), a24.clone(), a34.clone(),
    ]);
    if !satisfies_pluecker(&t) {
        return Err(Error::PlueckerViolation(format!("completed tuple {t}")));
    }
    Ok((a13, a14, a24))
}

/// `true` iff every pair of the coprimality schema has gcd 1.
pub fn coprimality_check(t: &CoxTuple) -> bool {
    COPRIMALITY_SCHEMA.iter().all(|&(i, j)| t.a[i].gcd(&t.a[j]).is_one())
}

/// The blow-down `(a) -> (a2 a3 a23 : a1 a3 a13 : a1 a2 a12)`.
///
/// For coprime input the raw triple must already be primitive; a common
/// factor is reported as an invariant violation rather than divided out.
pub fn blow_down(t: &CoxTuple) -> Result<ProjectivePoint> {
    if let Some(name) = t.first_zero() {
        return Err(Error::ZeroCoordinate(name));
    }
    if !satisfies_pluecker(t) {
        return Err(Error::PlueckerViolation(format!("{t}")));
    }
    let a = &t.a;
    let y1 = &a[A2] * &a[A3] * &a[A23];
    let y2 = &a[A1] * &a[A3] * &a[A13];
    let y3 = &a[A1] * &a[A2] * &a[A12];
    if coprimality_check(t) {
        let g = y1.gcd(&y2).gcd(&y3);
        if !g.is_one() {
            return Err(Error::PlueckerViolation(format!(
                "blow-down of coprime tuple {t} has content {g}"
            )));
        }
    }
    ProjectivePoint::new(y1, y2, y3)
}

fn exact_div(n: &BigInt, d: &BigInt, what: &str) -> Result<BigInt> {
    let (q, r) = n.div_rem(d);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::PlueckerViolation(format!("{what}: {n} not divisible by {d}")))
    }
}

/// Inverse chart on the complement of the six lines. With `x = y`:
/// `a1 = gcd(x2,x3)`, `a2 = gcd(x1,x3)`, `a3 = gcd(x1,x2)`,
/// `a4 = gcd(x1-x2, x1-x3)`, `a12 = x3/(a1a2)`, `a13 = x2/(a1a3)`,
/// `a23 = x1/(a2a3)`, `a14 = (x2-x3)/(a1a4)`, `a24 = (x1-x3)/(a2a4)`,
/// `a34 = (x1-x2)/(a3a4)`.
pub fn chart_lift(y: &ProjectivePoint) -> Result<CoxTuple> {
    if y.is_on_lines() {
        return Err(Error::OnLine);
    }
    let [x1, x2, x3] = y.coords();
    let a1 = x2.gcd(x3);
    let a2 = x1.gcd(x3);
    let a3 = x1.gcd(x2);
    let a4 = (x1 - x2).gcd(&(x1 - x3));
    let a12 = exact_div(x3, &(&a1 * &a2), "a12")?;
    let a13 = exact_div(x2, &(&a1 * &a3), "a13")?;
    let a23 = exact_div(x1, &(&a2 * &a3), "a23")?;
    let a14 = exact_div(&(x2 - x3), &(&a1 * &a4), "a14")?;
    let a24 = exact_div(&(x1 - x3), &(&a2 * &a4), "a24")?;
    let a34 = exact_div(&(x1 - x2), &(&a3 * &a4), "a34")?;
    let t = CoxTuple::new([a1, a2, a3, a4, a12, a13, a14, a23, a24, a34]);
    if !satisfies_pluecker(&t) {
        return Err(Error::PlueckerViolation(format!("chart lift of {y} gives {t}")));
    }
    Ok(t)
}

/// Integrality: `|y3| = gcd(y2, y3) gcd(y1, y3)`.
pub fn is_integral(y: &ProjectivePoint) -> Result<bool> {
    if y.is_on_lines() {
        return Err(Error::OnLine);
    }
    let [y1, y2, y3] = y.coords();
    Ok(y3.abs() == y2.gcd(y3) * y1.gcd(y3))
}

/// The unique representative of the sign orbit with `a1..a4 > 0`, `a12 > 0`.
/// The sign `l = (l0, l1, .., l4)` acts by `a_i -> l_i a_i`, `a_jk -> l0 l_j l_k a_jk`.
pub fn canonicalize_orbit(t: &CoxTuple) -> Result<CoxTuple> {
    if let Some(name) = t.first_zero() {
        return Err(Error::ZeroCoordinate(name));
    }
    let sign = |v: &BigInt| if v.is_negative() { -1i8 } else { 1i8 };
    let l = [sign(&t.a[A1]), sign(&t.a[A2]), sign(&t.a[A3]), sign(&t.a[A4])];
    let l0 = sign(&t.a[A12]) * l[0] * l[1];
    let apply = |v: &BigInt, s: i8| if s < 0 { -v } else { v.clone() };
    let a = &t.a;
    Ok(CoxTuple::new([
        apply(&a[A1], l[0]),
        apply(&a[A2], l[1]),
        apply(&a[A3], l[2]),
        apply(&a[A4], l[3]),
        apply(&a[A12], l0 * l[0] * l[1]),
        apply(&a[A13], l0 * l[0] * l[2]),
        apply(&a[A14], l0 * l[0] * l[3]),
        apply(&a[A23], l0 * l[1] * l[2]),
        apply(&a[A24], l0 * l[1] * l[3]),
        apply(&a[A34], l0 * l[2] * l[3]),
    ]))
}

/// Machine-integer variants used on the enumeration hot path.
pub mod small {
    use super::*;

    /// Residuals in `i128`.
    pub fn pluecker_residuals(a: &[i64; 10]) -> [i128; 5] {
        let m = |i: usize, j: usize| a[i] as i128 * a[j] as i128;
        [
            m(A4, A14) - m(A3, A13) + m(A2, A12),
            m(A4, A24) - m(A3, A23) + m(A1, A12),
            m(A4, A34) - m(A2, A23) + m(A1, A13),
            m(A3, A34) - m(A2, A24) + m(A1, A14),
            m(A12, A34) - m(A13, A24) + m(A23, A14),
        ]
    }

    pub fn coprimality_check(a: &[i64; 10]) -> bool {
        COPRIMALITY_SCHEMA.iter().all(|&(i, j)| gcd(a[i], a[j]) == 1)
    }

    /// Sign-orbit representative with `a1..a4 > 0`, `a12 > 0`; all entries nonzero.
    pub fn canonicalize_orbit(a: &[i64; 10]) -> [i64; 10] {
        let l = [a[A1].signum(), a[A2].signum(), a[A3].signum(), a[A4].signum()];
        let l0 = a[A12].signum() * l[0] * l[1];
        [
            a[A1] * l[0],
            a[A2] * l[1],
            a[A3] * l[2],
            a[A4] * l[3],
            a[A12] * l0 * l[0] * l[1],
            a[A13] * l0 * l[0] * l[2],
            a[A14] * l0 * l[0] * l[3],
            a[A23] * l0 * l[1] * l[2],
            a[A24] * l0 * l[1] * l[3],
            a[A34] * l0 * l[2] * l[3],
        ]
    }

    /// The four P1 monomials `a1a2a23a14`, `a1a2a13a24`, `a2a3a23a34`, `a1a3a13a34`.
    #[inline]
    pub fn p1_monomials(a: &[i64; 10]) -> [i64; 4] {
        [
            a[A1] * a[A2] * a[A23] * a[A14],
            a[A1] * a[A2] * a[A13] * a[A24],
            a[A2] * a[A3] * a[A23] * a[A34],
            a[A1] * a[A3] * a[A13] * a[A34],
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: [i64; 10] = [1, 1, 1, 1, 1, 3, 2, 2, 1, -1];

    fn big(a: [i64; 10]) -> CoxTuple {
        CoxTuple::from_i64(a)
    }

    #[test]
    fn schema_matches_definition() {
        // Label each coordinate by its index set; constrained pairs are
        // exactly those of the three listed shapes.
        let labels: [&[u8]; 10] = [&[1], &[2], &[3], &[4], &[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]];
        let mut expected = Vec::new();
        for i in 0..10 {
            for j in i + 1..10 {
                let (u, v) = (labels[i], labels[j]);
                let shared = u.iter().filter(|x| v.contains(x)).count();
                let keep = match (u.len(), v.len()) {
                    (1, 1) => true,
                    (1, 2) => !v.contains(&u[0]),
                    (2, 2) => shared == 1,
                    _ => unreachable!(),
                };
                if keep {
                    expected.push((i, j));
                }
            }
        }
        let mut got = COPRIMALITY_SCHEMA.to_vec();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn residual_examples() {
        assert!(pluecker_residuals(&big(T)).iter().all(Zero::is_zero));
        let ones = pluecker_residuals(&big([1; 10]));
        assert!(ones.iter().all(|r| *r == BigInt::one()));
    }

    #[test]
    fn dependent_coordinate_examples() {
        let b = |v: i64| BigInt::from(v);
        let got = dependent_coordinates(&b(1), &b(1), &b(1), &b(1), &b(1), &b(2), &b(-1)).unwrap();
        assert_eq!(got, (b(3), b(2), b(1)));
        let got = dependent_coordinates(&b(2), &b(1), &b(1), &b(1), &b(1), &b(1), &b(1)).unwrap();
        assert_eq!(got.0, b(0));
        let t = CoxTuple::new([b(2), b(1), b(1), b(1), b(1), got.0, got.1, b(1), got.2, b(1)]);
        assert!(satisfies_pluecker(&t));
        assert!(!t.is_on_v());
        assert_eq!(
            dependent_coordinates(&b(2), &b(1), &b(1), &b(1), &b(1), &b(1), &b(2)),
            Err(Error::NoSolution)
        );
    }

    #[test]
    fn blow_down_and_chart() {
        let y = blow_down(&big(T)).unwrap();
        assert_eq!(y, ProjectivePoint::from_i64(2, 3, 1).unwrap());
        assert_eq!(chart_lift(&y).unwrap(), big(T));
        let bad = [1, 1, 1, 1, 1, 0, 2, 2, 1, -1];
        assert_eq!(blow_down(&big(bad)), Err(Error::ZeroCoordinate("a13")));
        let z = ProjectivePoint::from_i64(1, 2, 4).unwrap();
        let l = chart_lift(&z).unwrap();
        assert_eq!(l.get(A1), &BigInt::from(2));
        assert_eq!(l.get(A12), &BigInt::from(2));
        assert_eq!(chart_lift(&ProjectivePoint::from_i64(1, 1, 2).unwrap()), Err(Error::OnLine));
    }

    #[test]
    fn integrality_examples() {
        let p = |a, b, c| ProjectivePoint::from_i64(a, b, c).unwrap();
        assert!(is_integral(&p(2, 3, 1)).unwrap());
        assert!(!is_integral(&p(1, 2, 4)).unwrap());
        assert!(is_integral(&p(-7, 5, 1)).unwrap());
    }

    #[test]
    fn canonicalization() {
        let c = big(T);
        assert_eq!(canonicalize_orbit(&c).unwrap(), c);
        // l = (-1, -1, 1, 1, 1): a1 -> -a1, a_jk -> -l_j l_k a_jk.
        let twisted = big([-1, 1, 1, 1, 1, 3, 2, -2, -1, 1]);
        assert!(satisfies_pluecker(&twisted));
        assert_eq!(canonicalize_orbit(&twisted).unwrap(), c);
        assert_eq!(small::canonicalize_orbit(&[-1, 1, 1, 1, 1, 3, 2, -2, -1, 1]), T);
        assert!(coprimality_check(&c));
        assert!(small::coprimality_check(&T));
        let shared = [2, 2, 1, 1, 1, 1, 1, 1, 1, 1];
        assert!(!coprimality_check(&big(shared)));
        // Only a12 and a34 share a factor: not a constrained pair.
        let disjoint = [1, 1, 1, 1, 2, 1, 1, 1, 1, 2];
        assert!(coprimality_check(&big(disjoint)));
    }
}
