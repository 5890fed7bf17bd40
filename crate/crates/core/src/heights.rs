//! Height-defining sets of quadratic forms and the log-anticanonical height.
//!
//! Every form vanishes at p3 = (0:0:1) and p4 = (1:1:1), so it lies in the
//! 4-dimensional space spanned by the basis
//! `A = Y1(Y2-Y3)`, `B = Y2(Y1-Y3)`, `C = Y1(Y1-Y2)`, `D = Y2(Y1-Y2)` (the set P1).
//! A form with coefficients `(c11, c22, c33, c12, c13, c23)` has coordinates
//! `(-c13, -c23, c11, -c22)` in that basis; all lifts to torsor coordinates go
//! through this identity.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::torsor::{CoxTuple, A1, A12, A13, A2, A23, A3, A4};

/// Coefficients `(c11, c22, c33, c12, c13, c23)` of the four forms of P1.
pub const P1_ROWS: [[i64; 6]; 4] = [
    [0, 0, 0, 1, -1, 0],  // Y1(Y2-Y3)
    [0, 0, 0, 1, 0, -1],  // Y2(Y1-Y3)
    [1, 0, 0, -1, 0, 0],  // Y1(Y1-Y2)
    [0, -1, 0, 1, 0, 0],  // Y2(Y1-Y2)
];

/// Coefficients of the four forms of P2.
pub const P2_ROWS: [[i64; 6]; 4] = [
    [1, 0, 0, 0, -1, 0],  // Y1(Y1-Y3)
    [0, 1, 0, 0, 0, -1],  // Y2(Y2-Y3)
    [1, 1, 0, -2, 0, 0],  // (Y1-Y2)^2
    [0, 0, 0, 0, 1, -1],  // Y3(Y1-Y2)
];

/// The two forms of P3 that lie in neither P1 nor P2.
pub const P3_EXTRA_ROWS: [[i64; 6]; 2] = [
    [1, 0, 0, -1, -1, 1], // (Y1-Y2)(Y1-Y3)
    [0, -1, 0, 1, -1, 1], // (Y1-Y2)(Y2-Y3)
];

/// A quadratic form `c11 Y1^2 + c22 Y2^2 + c33 Y3^2 + c12 Y1Y2 + c13 Y1Y3 + c23 Y2Y3`
/// vanishing at p3 and p4.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    coeffs: [BigInt; 6],
}

impl QuadraticForm {
    pub fn new(coeffs: [BigInt; 6]) -> Result<Self> {
        let sum = coeffs.iter().fold(BigInt::zero(), |s, c| s + c);
        if !coeffs[2].is_zero() || !sum.is_zero() {
            return Err(Error::FormNotVanishing);
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64(c: [i64; 6]) -> Result<Self> {
        Self::new(c.map(BigInt::from))
    }

    /// Coefficients in the order `(c11, c22, c33, c12, c13, c23)`.
    pub fn coefficients(&self) -> &[BigInt; 6] {
        &self.coeffs
    }

    pub fn eval(&self, y1: &BigInt, y2: &BigInt, y3: &BigInt) -> BigInt {
        let c = &self.coeffs;
        &c[0] * y1 * y1
            + &c[1] * y2 * y2
            + &c[2] * y3 * y3
            + &c[3] * y1 * y2
            + &c[4] * y1 * y3
            + &c[5] * y2 * y3
    }

    /// Coordinates in the basis P1 = (A, B, C, D).
    pub fn p1_coordinates(&self) -> [BigInt; 4] {
        let c = &self.coeffs;
        [-&c[4], -&c[5], c[0].clone(), -&c[1]]
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["Y1^2", "Y2^2", "Y3^2", "Y1Y2", "Y1Y3", "Y2Y3"];
        let mut first = true;
        for (c, n) in self.coeffs.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{sign}{n}")?;
            } else {
                write!(f, "{sign}{mag}{n}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A point of P²(ℚ) stored as its primitive, sign-canonical integer triple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    y: [BigInt; 3],
}

impl ProjectivePoint {
    /// Normalizes an arbitrary nonzero triple: divides by the content and makes
    /// the first nonzero coordinate positive.
    pub fn new(y1: BigInt, y2: BigInt, y3: BigInt) -> Result<Self> {
        let g = y1.gcd(&y2).gcd(&y3);
        if g.is_zero() {
            return Err(Error::ZeroTriple);
        }
        let mut y = [y1 / &g, y2 / &g, y3 / &g];
        let lead = y.iter().find(|v| !v.is_zero()).expect("nonzero triple");
        if lead.is_negative() {
            for v in &mut y {
                *v = -&*v;
            }
        }
        Ok(Self { y })
    }

    pub fn from_i64(y1: i64, y2: i64, y3: i64) -> Result<Self> {
        Self::new(y1.into(), y2.into(), y3.into())
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.y
    }

    pub fn y1(&self) -> &BigInt {
        &self.y[0]
    }

    pub fn y2(&self) -> &BigInt {
        &self.y[1]
    }

    pub fn y3(&self) -> &BigInt {
        &self.y[2]
    }

    /// Machine-integer coordinates, if they fit.
    pub fn to_i64(&self) -> Option<[i64; 3]> {
        Some([self.y[0].to_i64()?, self.y[1].to_i64()?, self.y[2].to_i64()?])
    }

    /// True for p1 = (1:0:0), p2 = (0:1:0), p3 = (0:0:1), p4 = (1:1:1).
    pub fn is_blown_up_point(&self) -> bool {
        let [a, b, c] = &self.y;
        let z = |v: &BigInt| v.is_zero();
        (z(b) && z(c)) || (z(a) && z(c)) || (z(a) && z(b)) || (a == b && b == c)
    }

    /// True if the point lies on one of the six lines through two of p1..p4:
    /// `y1 y2 y3 (y1-y2)(y1-y3)(y2-y3) = 0`.
    pub fn is_on_lines(&self) -> bool {
        let [a, b, c] = &self.y;
        a.is_zero() || b.is_zero() || c.is_zero() || a == b || a == c || b == c
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.y[0], self.y[1], self.y[2])
    }
}

/// Identifier of a height set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HeightSetId {
    P1,
    P2,
    P3,
    Custom,
}

impl HeightSetId {
    pub fn as_str(self) -> &'static str {
        match self {
            HeightSetId::P1 => "p1",
            HeightSetId::P2 => "p2",
            HeightSetId::P3 => "p3",
            HeightSetId::Custom => "custom",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p1" => Some(HeightSetId::P1),
            "p2" => Some(HeightSetId::P2),
            "p3" => Some(HeightSetId::P3),
            "custom" => Some(HeightSetId::Custom),
            _ => None,
        }
    }
}

impl fmt::Display for HeightSetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A finite spanning set of forms defining the height, with its comparison
/// constant against P1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightSet {
    id: HeightSetId,
    forms: Vec<QuadraticForm>,
    kappa: u64,
}

/// On-disk representation: either `{"id": ..., "forms": [[6 ints], ...]}` or a
/// bare array of rows.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HeightSetFile {
    Tagged {
        #[serde(default)]
        id: Option<String>,
        #[serde(default)]
        forms: Option<Vec<[i64; 6]>>,
    },
    Rows(Vec<[i64; 6]>),
}

impl HeightSet {
    pub fn p1() -> Self {
        Self::from_rows(HeightSetId::P1, &P1_ROWS).expect("P1 is valid")
    }

    pub fn p2() -> Self {
        Self::from_rows(HeightSetId::P2, &P2_ROWS).expect("P2 is valid")
    }

    pub fn p3() -> Self {
        let rows: Vec<[i64; 6]> = P1_ROWS
            .iter()
            .chain(P2_ROWS.iter())
            .chain(P3_EXTRA_ROWS.iter())
            .copied()
            .collect();
        Self::from_rows(HeightSetId::P3, &rows).expect("P3 is valid")
    }

    pub fn builtin(id: HeightSetId) -> Option<Self> {
        match id {
            HeightSetId::P1 => Some(Self::p1()),
            HeightSetId::P2 => Some(Self::p2()),
            HeightSetId::P3 => Some(Self::p3()),
            HeightSetId::Custom => None,
        }
    }

    /// A user-supplied set. Validates vanishing and rank and computes kappa.
    pub fn custom(forms: Vec<QuadraticForm>) -> Result<Self> {
        Self::build(HeightSetId::Custom, forms)
    }

    pub fn from_rows(id: HeightSetId, rows: &[[i64; 6]]) -> Result<Self> {
        let forms = rows
            .iter()
            .map(|r| QuadraticForm::from_i64(*r))
            .collect::<Result<Vec<_>>>()?;
        Self::build(id, forms)
    }

    /// Interprets a parsed height-set file. A built-in id without forms
    /// selects the built-in set; explicit forms always give a custom set.
    pub fn from_file(file: &HeightSetFile) -> Result<Self> {
        match file {
            HeightSetFile::Rows(rows) => Self::from_rows(HeightSetId::Custom, rows),
            HeightSetFile::Tagged { id, forms: Some(rows) } => {
                let set = Self::from_rows(HeightSetId::Custom, rows)?;
                if let Some(builtin) = id.as_deref().and_then(HeightSetId::parse).and_then(Self::builtin) {
                    if builtin.forms == set.forms {
                        return Ok(builtin);
                    }
                }
                Ok(set)
            }
            HeightSetFile::Tagged { id: Some(id), forms: None } => HeightSetId::parse(id)
                .and_then(Self::builtin)
                .ok_or_else(|| Error::InvalidHeightSet(format!("unknown height set id {id:?}"))),
            HeightSetFile::Tagged { id: None, forms: None } => {
                Err(Error::InvalidHeightSet("neither id nor forms given".into()))
            }
        }
    }

    /// Serializable representation (id plus coefficient rows).
    pub fn to_file(&self) -> HeightSetFile {
        HeightSetFile::Tagged {
            id: Some(self.id.to_string()),
            forms: Some(
                self.forms
                    .iter()
                    .map(|f| f.coeffs.clone().map(|c| c.to_i64().expect("coefficient fits i64")))
                    .collect(),
            ),
        }
    }

    fn build(id: HeightSetId, forms: Vec<QuadraticForm>) -> Result<Self> {
        if forms.is_empty() {
            return Err(Error::InvalidHeightSet("empty set".into()));
        }
        let r = linalg::rank(&coordinate_rows(&forms));
        if r != 4 {
            return Err(Error::NotSpanning(r));
        }
        let mut set = Self { id, forms, kappa: 0 };
        set.kappa = comparison_constant_for(&Self::p1_forms(), &set)?;
        Ok(set)
    }

    fn p1_forms() -> Vec<QuadraticForm> {
        P1_ROWS.iter().map(|r| QuadraticForm::from_i64(*r).unwrap()).collect()
    }

    pub fn id(&self) -> HeightSetId {
        self.id
    }

    pub fn forms(&self) -> &[QuadraticForm] {
        &self.forms
    }

    /// The comparison constant against P1 (see [`comparison_constant`]).
    pub fn kappa(&self) -> u64 {
        self.kappa
    }

    /// A stable key identifying the set by content, used for caching.
    pub fn key(&self) -> String {
        match self.id {
            HeightSetId::Custom => {
                let rows: Vec<String> = self
                    .forms
                    .iter()
                    .map(|f| f.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "))
                    .collect();
                format!("custom[{}]", rows.join(";"))
            }
            id => id.to_string(),
        }
    }
}

fn coordinate_rows(forms: &[QuadraticForm]) -> Vec<Vec<BigRational>> {
    forms
        .iter()
        .map(|f| f.p1_coordinates().into_iter().map(BigRational::from_integer).collect())
        .collect()
}

/// `P(y)` evaluated exactly.
pub fn eval_form(p: &QuadraticForm, y: &ProjectivePoint) -> BigInt {
    p.eval(y.y1(), y.y2(), y.y3())
}

/// `gcd(y1, y2) * gcd(y1 - y2, y1 - y3)` on the primitive representative.
pub fn gcd_product(y: &ProjectivePoint) -> BigInt {
    let [a, b, c] = y.coords();
    a.gcd(b) * (a - b).gcd(&(a - c))
}

/// Checks `gcd_{P in ps} P(y) = gcd(y1,y2) gcd(y1-y2, y1-y3)`.
pub fn gcd_identity_check(ps: &HeightSet, y: &ProjectivePoint) -> Result<bool> {
    if y.is_blown_up_point() {
        return Err(Error::ExcludedPoint);
    }
    let lhs = ps
        .forms
        .iter()
        .fold(BigInt::zero(), |g, p| g.gcd(&eval_form(p, y)));
    Ok(lhs == gcd_product(y))
}

/// The height on P²(ℚ): `max_P |P(y)| / (gcd(y1,y2) gcd(y1-y2, y1-y3))`.
pub fn height_projective(ps: &HeightSet, y: &ProjectivePoint) -> Result<BigRational> {
    if y.is_blown_up_point() {
        return Err(Error::ExcludedPoint);
    }
    let max = ps
        .forms
        .iter()
        .map(|p| eval_form(p, y).abs())
        .max()
        .expect("height set is nonempty");
    if max.is_zero() {
        return Err(Error::BaseLocus);
    }
    Ok(BigRational::new(max, gcd_product(y)))
}

/// `P(a2 a3 a23, a1 a3 a13, a1 a2 a12) / (a3 a4)`, which is exact on the torsor.
pub fn lift_ptilde(p: &QuadraticForm, a: &CoxTuple) -> Result<BigInt> {
    let c = a.coords();
    let den = &c[A3] * &c[A4];
    if den.is_zero() {
        return Err(Error::ZeroCoordinate(if c[A3].is_zero() { "a3" } else { "a4" }));
    }
    let y1 = &c[A2] * &c[A3] * &c[A23];
    let y2 = &c[A1] * &c[A3] * &c[A13];
    let y3 = &c[A1] * &c[A2] * &c[A12];
    let (q, r) = p.eval(&y1, &y2, &y3).div_rem(&den);
    if !r.is_zero() {
        return Err(Error::PlueckerViolation(format!(
            "P(pi(a)) not divisible by a3 a4 for {a}"
        )));
    }
    Ok(q)
}

/// `max_P |P~(a)|`, the height read off torsor coordinates.
pub fn height_cox(ps: &HeightSet, a: &CoxTuple) -> Result<BigInt> {
    let mut best = BigInt::zero();
    for p in &ps.forms {
        let v = lift_ptilde(p, a)?.abs();
        if v > best {
            best = v;
        }
    }
    Ok(best)
}

/// The smallest integer kappa with `max_{P1} |P(y)| <= kappa max_{ps} |P(y)|`
/// obtainable from a coefficient-sum bound.
pub fn comparison_constant(ps: &HeightSet) -> Result<u64> {
    comparison_constant_for(&HeightSet::p1_forms(), ps)
}

/// Generalization of [`comparison_constant`] to an arbitrary target set:
/// for each target form the minimal L1 norm of a rational combination of
/// `ps.forms` representing it, maximized over targets and rounded up.
///
/// The minimal L1 representation is attained at a basic solution, i.e. one
/// supported on four linearly independent forms, so all such 4-subsets are
/// tried. Very large sets fall back to the first basis found, which still
/// gives a valid (looser) bound.
pub fn comparison_constant_for(targets: &[QuadraticForm], ps: &HeightSet) -> Result<u64> {
    const MAX_SUBSETS: usize = 50_000;
    let cols = coordinate_rows(&ps.forms);
    let n = cols.len();
    if linalg::rank(&cols) != 4 {
        return Err(Error::NotSpanning(linalg::rank(&cols)));
    }
    let mut bases: Vec<Vec<Vec<BigRational>>> = Vec::new();
    'outer: for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let b = vec![cols[i].clone(), cols[j].clone(), cols[k].clone(), cols[l].clone()];
                    if linalg::rank(&b) == 4 {
                        bases.push(b);
                        if bases.len() >= MAX_SUBSETS {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    let mut worst = BigRational::zero();
    for t in coordinate_rows(targets) {
        let best = bases
            .iter()
            .filter_map(|b| linalg::solve_columns(b, &t))
            .map(|x| linalg::l1_norm(&x))
            .min()
            .expect("a spanning set has a basis");
        if best > worst {
            worst = best;
        }
    }
    let k = worst.ceil().to_integer();
    k.to_u64()
        .filter(|&k| k >= 1)
        .ok_or_else(|| Error::InvalidHeightSet(format!("comparison constant {k} out of range")))
}

/// Integer rows expressing each form of a set in the P1 basis; the fast
/// height evaluation on torsor points is `max_i |rows[i] . (M1, M2, M3, M4)|`
/// where `M1..M4` are the four P1 monomials.
#[derive(Clone, Debug)]
pub(crate) struct MonomialHeight {
    rows: Vec<[i64; 4]>,
}

impl MonomialHeight {
    pub(crate) fn new(ps: &HeightSet) -> Result<Self> {
        let rows = ps
            .forms
            .iter()
            .map(|f| {
                let c = f.p1_coordinates();
                let mut r = [0i64; 4];
                for (dst, src) in r.iter_mut().zip(c.iter()) {
                    *dst = src
                        .to_i64()
                        .filter(|v| v.unsigned_abs() < (1 << 40))
                        .ok_or_else(|| Error::InvalidHeightSet("coefficients too large for enumeration".into()))?;
                }
                Ok(r)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { rows })
    }

    /// Height from the four P1 monomial values.
    #[inline]
    pub(crate) fn eval(&self, m: &[i64; 4]) -> i128 {
        let mut best = 0i128;
        for r in &self.rows {
            let v = r[0] as i128 * m[0] as i128
                + r[1] as i128 * m[1] as i128
                + r[2] as i128 * m[2] as i128
                + r[3] as i128 * m[3] as i128;
            best = best.max(v.abs());
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: i64, b: i64, c: i64) -> ProjectivePoint {
        ProjectivePoint::from_i64(a, b, c).unwrap()
    }

    #[test]
    fn form_display() {
        let f = QuadraticForm::from_i64(P1_ROWS[0]).unwrap();
        assert_eq!(f.to_string(), "Y1Y2-Y1Y3");
        let g = QuadraticForm::from_i64(P2_ROWS[2]).unwrap();
        assert_eq!(g.to_string(), "Y1^2+Y2^2-2Y1Y2");
    }

    #[test]
    fn forms_must_vanish() {
        assert_eq!(QuadraticForm::from_i64([1, 0, 0, 0, 0, 0]), Err(Error::FormNotVanishing));
        assert_eq!(QuadraticForm::from_i64([0, 0, 1, 0, 0, -1]), Err(Error::FormNotVanishing));
    }

    #[test]
    fn p1_coordinates_recover_forms() {
        let basis: Vec<QuadraticForm> = P1_ROWS.iter().map(|r| QuadraticForm::from_i64(*r).unwrap()).collect();
        for set in [HeightSet::p1(), HeightSet::p2(), HeightSet::p3()] {
            for f in set.forms() {
                let lam = f.p1_coordinates();
                let mut acc = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
                for (l, b) in lam.iter().zip(&basis) {
                    for (a, c) in acc.iter_mut().zip(b.coefficients()) {
                        *a += l * c;
                    }
                }
                assert_eq!(&acc, f.coefficients());
            }
        }
    }

    #[test]
    fn canonical_points() {
        let p = ProjectivePoint::from_i64(-2, 4, -6).unwrap();
        assert_eq!(p.coords(), &[1.into(), (-2).into(), 3.into()]);
        let q = ProjectivePoint::from_i64(0, -3, 6).unwrap();
        assert_eq!(q.coords(), &[0.into(), 1.into(), (-2).into()]);
        assert_eq!(ProjectivePoint::from_i64(0, 0, 0), Err(Error::ZeroTriple));
        assert!(pt(5, 5, 5).is_blown_up_point());
        assert!(pt(0, 0, 3).is_blown_up_point());
        assert!(!pt(1, 1, 2).is_blown_up_point());
        assert!(pt(1, 1, 2).is_on_lines());
    }

    #[test]
    fn eval_examples() {
        let a = QuadraticForm::from_i64(P1_ROWS[0]).unwrap();
        let b = QuadraticForm::from_i64(P1_ROWS[1]).unwrap();
        assert_eq!(eval_form(&a, &pt(2, 3, 1)), 4.into());
        assert_eq!(eval_form(&b, &pt(1, 2, 4)), (-6).into());
        for f in HeightSet::p3().forms() {
            assert_eq!(f.eval(&0.into(), &0.into(), &1.into()), BigInt::zero());
        }
    }

    #[test]
    fn heights_examples() {
        let p1 = HeightSet::p1();
        assert_eq!(height_projective(&p1, &pt(2, 3, 1)).unwrap(), BigRational::from_integer(4.into()));
        assert_eq!(height_projective(&p1, &pt(1, 2, 4)).unwrap(), BigRational::from_integer(6.into()));
        assert_eq!(height_projective(&p1, &pt(-1, -2, -4)), height_projective(&p1, &pt(1, 2, 4)));
        assert!(gcd_identity_check(&p1, &pt(1, 2, 4)).unwrap());
        assert!(gcd_identity_check(&p1, &pt(2, 3, 1)).unwrap());
        assert_eq!(gcd_identity_check(&p1, &pt(0, 0, 1)), Err(Error::ExcludedPoint));
    }

    #[test]
    fn kappa_values() {
        assert_eq!(comparison_constant(&HeightSet::p1()).unwrap(), 1);
        assert_eq!(comparison_constant(&HeightSet::p3()).unwrap(), 1);
        assert_eq!(comparison_constant(&HeightSet::p2()).unwrap(), 2);
        let p3_forms = HeightSet::p3().forms().to_vec();
        assert_eq!(comparison_constant_for(&p3_forms, &HeightSet::p1()).unwrap(), 3);
        assert_eq!(comparison_constant_for(&p3_forms, &HeightSet::p2()).unwrap(), 2);
        assert_eq!(comparison_constant_for(&p3_forms, &HeightSet::p3()).unwrap(), 1);
    }

    #[test]
    fn rank_deficient_sets_are_rejected() {
        let rows = [P1_ROWS[0], P1_ROWS[1], P1_ROWS[2]];
        assert_eq!(HeightSet::from_rows(HeightSetId::Custom, &rows), Err(Error::NotSpanning(3)));
    }

    #[test]
    fn file_round_trip() {
        let f = HeightSet::p2().to_file();
        assert_eq!(HeightSet::from_file(&f).unwrap(), HeightSet::p2());
        let bare = HeightSetFile::Rows(P1_ROWS.to_vec());
        let s = HeightSet::from_file(&bare).unwrap();
        assert_eq!(s.id(), HeightSetId::Custom);
        assert_eq!(s.kappa(), 1);
        let by_id = HeightSetFile::Tagged { id: Some("p3".into()), forms: None };
        assert_eq!(HeightSet::from_file(&by_id).unwrap(), HeightSet::p3());
    }
}
