use dp5_core::constants::finite_field::padic_density_check_with_exponent;
use dp5_core::constants::interval::to_f64;
use dp5_core::constants::*;
use dp5_core::heights::HeightSet;
use num_rational::BigRational;

#[test]
fn euler_enclosures_nest_and_shrink() {
    let cutoffs = [11, 100, 1_000, 10_000, 100_000];
    let e: Vec<Interval> = cutoffs.iter().map(|&c| euler_product(c).unwrap()).collect();
    for w in e.windows(2) {
        assert!(w[0].contains_interval(&w[1]));
        assert!(w[1].width() < w[0].width());
    }
    assert_eq!(
        euler_partial_product(3),
        BigRational::new(3.into(), 16.into()) * BigRational::new(112.into(), 243.into())
    );
}

#[test]
fn local_factors_match_point_counts() {
    for p in [2, 3, 5, 7, 11, 13] {
        assert!(padic_density_check(p).unwrap(), "p = {p}");
        for e in [3, 5] {
            assert!(!padic_density_check_with_exponent(p, e).unwrap(), "p = {p}, e = {e}");
        }
    }
}

#[test]
fn surface_point_counts() {
    for (p, x, u) in [(2, 15, 12), (3, 25, 21), (5, 51, 45), (13, 235, 221)] {
        let c = ff_surface_count(p).unwrap();
        assert_eq!((c.surface, c.open), (x, u));
    }
}

#[test]
fn polytope_engine() {
    let cube: Vec<Halfspace> = (0..4)
        .map(|i| {
            let mut n = [0; 4];
            n[i] = 1;
            Halfspace::from_i64(&n, 1)
        })
        .collect();
    assert_eq!(polytope_volume(&cube).unwrap(), BigRational::from_integer(1.into()));
    let simplex = [Halfspace::from_i64(&[1, 1, 1, 1], 1)];
    assert_eq!(polytope_volume(&simplex).unwrap(), BigRational::new(1.into(), 24.into()));
    assert_eq!(alpha_exact().unwrap(), BigRational::new(17.into(), 576.into()));
    let mc = alpha_monte_carlo(2_000_000, 11);
    assert!(mc.agrees_with(17.0 / 576.0, 4.0), "{mc:?}");
}

#[test]
fn leading_constant_nests_under_refinement() {
    let p1 = HeightSet::p1();
    let coarse = leading_constant(&p1, 1_000, 1e-2).unwrap();
    let fine = leading_constant(&p1, 10_000, 1e-4).unwrap();
    assert!(coarse.c.contains_interval(&fine.c));
    assert!(coarse.omega_archimedean.contains_interval(&fine.omega_archimedean));
    assert!(coarse.euler_value.contains_interval(&fine.euler_value));
    let json = fine.to_json(12);
    assert_eq!(json.alpha, "17/576");
    assert_eq!(json.log_exponent, 4);
    assert!(to_f64(&fine.c.lo) > 0.0);
}
