use dp5_core::enumerator::*;
use dp5_core::heights::HeightSet;
use dp5_core::torsor::small::{coprimality_check, pluecker_residuals};
use std::sync::atomic::{AtomicU64, Ordering};

#[test]
fn torsor_and_direct_counts_agree() {
    for ps in [HeightSet::p1(), HeightSet::p2(), HeightSet::p3()] {
        for b in [1, 4, 10, 50, 100] {
            assert_eq!(count_torsor(b, &ps).unwrap().count, count_direct(b, &ps).unwrap().count, "{} B={b}", ps.key());
        }
    }
}

#[test]
fn reference_counts() {
    let s = count_series(&[1, 2, 4, 10, 20, 50, 100, 200, 1_000, 10_000], &HeightSet::p1()).unwrap();
    let counts: Vec<u64> = s.iter().map(|r| r.count).collect();
    assert_eq!(counts, [0, 0, 16, 110, 402, 1872, 5672, 16166, 162776, 3635924]);
    assert!(s.iter().all(|r| r.method == Method::Torsor && r.height_set_id == "p1"));
}

#[test]
fn visitor_sees_every_point_once() {
    let ps = HeightSet::p2();
    let n = AtomicU64::new(0);
    for_each_point(300, &ps, |a, h| {
        assert_eq!(pluecker_residuals(a), [0; 5]);
        assert!(coprimality_check(a) && a[4] == 1 && (1..=300).contains(&h));
        n.fetch_add(1, Ordering::Relaxed);
    })
    .unwrap();
    let pts = collect_points(300, &ps).unwrap();
    assert_eq!(n.into_inner(), pts.len() as u64);
    assert!(pts.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn invalid_bounds() {
    let p1 = HeightSet::p1();
    assert!(count_torsor(0, &p1).is_err());
    assert!(count_torsor(u64::MAX, &p1).is_err());
    assert!(count_direct(10_000_000, &p1).is_err());
}
