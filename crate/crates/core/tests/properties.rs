use dp5_core::heights::{gcd_identity_check, height_cox, height_projective, HeightSet, ProjectivePoint};
use dp5_core::torsor::{
    blow_down, canonicalize_orbit, chart_lift, coprimality_check, dependent_coordinates, is_integral,
    satisfies_pluecker, CoxTuple, A1, A12, A13, A14, A2, A23, A24, A3, A34, A4,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn primitive_off_lines() -> impl Strategy<Value = ProjectivePoint> {
    (-10_000i64..=10_000, -10_000i64..=10_000, -10_000i64..=10_000).prop_filter_map("primitive, off the lines", |(a, b, c)| {
        let g = BigInt::from(a).gcd(&BigInt::from(b)).gcd(&BigInt::from(c));
        if !g.is_one() {
            return None;
        }
        let y = ProjectivePoint::from_i64(a, b, c).ok()?;
        (!y.is_on_lines()).then_some(y)
    })
}

/// Integral points: `y3 = ±d1 d2`, `y1 = d2 u`, `y2 = d1 v`, filtered to
/// primitive off-line triples with `|y3| = gcd(y2,y3) gcd(y1,y3)`.
fn integral_off_lines() -> impl Strategy<Value = ProjectivePoint> {
    (1i64..40, 1i64..40, -300i64..=300, -300i64..=300, any::<bool>()).prop_filter_map(
        "integral, primitive, off the lines",
        |(d1, d2, u, v, neg)| {
            let (y1, y2, y3) = (d2 * u, d1 * v, if neg { -d1 * d2 } else { d1 * d2 });
            let g = BigInt::from(y1).gcd(&BigInt::from(y2)).gcd(&BigInt::from(y3));
            if !g.is_one() {
                return None;
            }
            let y = ProjectivePoint::from_i64(y1, y2, y3).ok()?;
            (!y.is_on_lines() && is_integral(&y).ok()?).then_some(y)
        },
    )
}

/// Applies the sign `l = (l0, .., l4)`: `a_i -> l_i a_i`, `a_jk -> l0 l_j l_k a_jk`.
fn twist(t: &CoxTuple, l: [bool; 5]) -> CoxTuple {
    let s = |b: bool| if b { -1i64 } else { 1 };
    let l: Vec<i64> = l.iter().map(|&b| s(b)).collect();
    let a = t.coords();
    let pair = |v: &BigInt, j: usize, k: usize| v * (l[0] * l[j] * l[k]);
    CoxTuple::new([
        &a[A1] * l[1],
        &a[A2] * l[2],
        &a[A3] * l[3],
        &a[A4] * l[4],
        pair(&a[A12], 1, 2),
        pair(&a[A13], 1, 3),
        pair(&a[A14], 1, 4),
        pair(&a[A23], 2, 3),
        pair(&a[A24], 2, 4),
        pair(&a[A34], 3, 4),
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn chart_lift_inverts_blow_down(y in primitive_off_lines()) {
        let t = chart_lift(&y).unwrap();
        prop_assert!(satisfies_pluecker(&t));
        prop_assert!(coprimality_check(&t));
        prop_assert_eq!(blow_down(&t).unwrap(), y.clone());
        prop_assert_eq!(is_integral(&y).unwrap(), t.get(A12).abs().is_one());
    }

    #[test]
    fn heights_agree_on_integral_points(y in integral_off_lines()) {
        let t = chart_lift(&y).unwrap();
        prop_assert!(t.get(A12).abs().is_one());
        for ps in [HeightSet::p1(), HeightSet::p2(), HeightSet::p3()] {
            let h = height_cox(&ps, &t).unwrap();
            prop_assert_eq!(BigRational::from_integer(h), height_projective(&ps, &y).unwrap());
        }
    }

    #[test]
    fn gcd_identity_holds(y in primitive_off_lines()) {
        for ps in [HeightSet::p1(), HeightSet::p2(), HeightSet::p3()] {
            prop_assert!(gcd_identity_check(&ps, &y).unwrap());
        }
    }

    #[test]
    fn dependent_coordinates_complete_the_tuple(y in primitive_off_lines()) {
        let t = chart_lift(&y).unwrap();
        let a = t.coords();
        let (a13, a14, a24) =
            dependent_coordinates(&a[A1], &a[A2], &a[A3], &a[A4], &a[A12], &a[A23], &a[A34]).unwrap();
        prop_assert_eq!((&a13, &a14, &a24), (&a[A13], &a[A14], &a[A24]));
    }

    #[test]
    fn sign_orbits_have_one_representative(y in primitive_off_lines(), l in any::<[bool; 5]>()) {
        let t = chart_lift(&y).unwrap();
        let u = twist(&t, l);
        prop_assert!(satisfies_pluecker(&u));
        prop_assert_eq!(blow_down(&u).unwrap(), y);
        let c = canonicalize_orbit(&t).unwrap();
        prop_assert_eq!(canonicalize_orbit(&u).unwrap(), c.clone());
        prop_assert_eq!(canonicalize_orbit(&c).unwrap(), c);
    }
}
