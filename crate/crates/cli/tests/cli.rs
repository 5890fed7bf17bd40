use std::process::{Command, Output};

use dp5_core::enumerator::count_torsor;
use dp5_core::heights::HeightSet;

fn dp5(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dp5")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// CSV rows without the header, split into fields.
fn rows(o: &Output) -> Vec<Vec<String>> {
    stdout(o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn count_matches_library() {
    let o = dp5(&["count", "--height-bound", "100", "--height-set", "p1"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("B,count,height_set,method,seconds\n"));
    let r = rows(&o);
    assert_eq!(r.len(), 1);
    let want = count_torsor(100, &HeightSet::p1()).unwrap().count;
    assert_eq!(r[0][..4], ["100".to_string(), want.to_string(), "p1".into(), "torsor".into()]);
}

#[test]
fn direct_method_agrees() {
    let t = rows(&dp5(&["count", "--height-bound", "100"]));
    let d = rows(&dp5(&["count", "--height-bound", "100", "--method", "direct"]));
    assert_eq!(t[0][1], d[0][1]);
    assert_eq!(d[0][3], "direct");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["count", "--height-bound", "0"][..],
        &["count"],
        &["count", "--height-bound", "10", "--height-set", "p9"],
        &["series", "--grid", "100,10"],
        &["constants", "--quad-tol", "-1"],
        &["constants", "--prime-cutoff", "7"],
        &["constants", "--no-such-flag"],
        &["count", "--height-bound", "10", "--height-set", "file:/nonexistent/set.json"],
    ] {
        let o = dp5(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn height_set_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("p2.json");
    std::fs::write(&good, serde_json::to_string(&HeightSet::p2().to_file()).unwrap()).unwrap();
    let arg = format!("file:{}", good.display());
    let from_file = rows(&dp5(&["count", "--height-bound", "200", "--height-set", &arg]));
    let builtin = rows(&dp5(&["count", "--height-bound", "200", "--height-set", "p2"]));
    assert_eq!(from_file[0][1], builtin[0][1]);

    let rank2 = dir.path().join("rank2.json");
    std::fs::write(&rank2, "[[0,0,0,1,-1,0],[0,0,0,1,0,-1]]").unwrap();
    let o = dp5(&["count", "--height-bound", "10", "--height-set", &format!("file:{}", rank2.display())]);
    assert_eq!(o.status.code(), Some(2));

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{").unwrap();
    let o = dp5(&["count", "--height-bound", "10", "--height-set", &format!("file:{}", garbage.display())]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn series_output_is_stable_and_cached() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    let cache = cache.to_str().unwrap();
    let args = ["series", "--grid", "10,100,1000", "--cache", cache];
    let first = dp5(&args);
    let second = dp5(&args);
    assert!(first.status.success() && second.status.success());
    let strip = |o: &Output| rows(o).into_iter().map(|r| r[..4].to_vec()).collect::<Vec<_>>();
    assert_eq!(strip(&first), strip(&second));
    assert_eq!(strip(&first).iter().map(|r| r[1].as_str()).collect::<Vec<_>>(), ["110", "5672", "162776"]);
    let text = std::fs::read_to_string(cache).unwrap();
    assert!(text.contains(&format!("1000|p1|torsor|{}", dp5_core::CODE_VERSION)));
    // A cached entry is served as is.
    assert!(rows(&second).iter().all(|r| r[4] == "0.000"));
}

#[test]
fn constants_report() {
    let o = dp5(&["constants", "--prime-cutoff", "100", "--quad-tol", "1e-3"]);
    assert!(o.status.success());
    let coarse: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(coarse["alpha"], "17/576");
    assert_eq!(coarse["log_exponent"], 4);
    let o = dp5(&["constants", "--prime-cutoff", "10000", "--quad-tol", "1e-3"]);
    let fine: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let num = |v: &serde_json::Value| v.as_str().unwrap().parse::<f64>().unwrap();
    let (c, f) = (&coarse["euler_value"], &fine["euler_value"]);
    assert!(num(&c[0]) <= num(&f[0]) && num(&f[1]) <= num(&c[1]));
}

#[test]
fn compare_table() {
    let o = dp5(&["compare", "--grid", "100,1000,10000", "--prime-cutoff", "1000", "--quad-tol", "1e-3"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("B,count,prediction_lo,prediction_hi,ratio_lo,ratio_hi\n"));
    let r = rows(&o);
    assert_eq!(r.len(), 3);
    let counts: Vec<u64> = r.iter().map(|x| x[1].parse().unwrap()).collect();
    assert!(counts.windows(2).all(|w| w[0] < w[1]));
    for x in &r {
        let lo: f64 = x[4].parse().unwrap();
        let hi: f64 = x[5].parse().unwrap();
        assert!(lo.is_finite() && hi.is_finite() && 0.0 < lo && lo <= hi);
    }
    let single = dp5(&["compare", "--height-bound", "500", "--prime-cutoff", "1000", "--quad-tol", "1e-3"]);
    assert_eq!(rows(&single).len(), 1);
}

#[test]
fn alpha_command() {
    let o = dp5(&["alpha", "--mc-samples", "100000"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("alpha = 17/576\n"));
}

#[test]
fn verify_suites() {
    let o = dp5(&["verify", "--suite", "alpha"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("alpha_exact") && !out.contains("padic"));

    let o = dp5(&["verify", "--suite", "padic", "--euler-exponent", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("padic_density_check"));
}
