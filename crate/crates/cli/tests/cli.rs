use std::fs;
use std::process::{Command, Output};

use lgp_cli::report::{RunReport, Status};
use lgp_core::fixtures::{APPENDIX_5_2, CURVE_POINTS};

fn lgp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgp"))
        .args(args)
        .env_remove("LGP_FIXTURES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn report(o: &Output) -> RunReport {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn only_algorithm1_4_2_reports_one_pair() {
    let o = lgp(&["verify-paper", "--only", "algorithm1-4-2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    assert_eq!(r.checks.len(), 1);
    let c = &r.checks[0];
    assert_eq!(c.name, "algorithm1-4-2");
    assert_eq!(c.status, Status::Pass);
    assert!(c.detail.contains("1 pair(s): I = {2}"), "{}", c.detail);
    assert_eq!(r.exit_code, 0);
}

#[test]
fn only_appendix_reports_twelve_passes() {
    let o = lgp(&["verify-paper", "--only", "appendix-5-2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    assert_eq!(r.checks.len(), 12);
    assert!(r.checks.iter().all(|c| c.status == Status::Pass));
    assert_eq!((r.summary.pass, r.summary.fail, r.summary.skipped), (12, 0, 0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in ["version", "checks", "summary"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn filtering_does_not_change_statuses() {
    let all = report(&lgp(&["verify-paper", "--only", "appendix-5-2", "--json"]));
    let one = report(&lgp(&["verify-paper", "--only", "appendix-5-2/H11", "--json"]));
    assert_eq!(one.checks.len(), 1);
    let same = all.checks.iter().find(|c| c.name == "appendix-5-2/H11").unwrap();
    assert_eq!(same.status, one.checks[0].status);
    assert_eq!(same.detail, one.checks[0].detail);
}

#[test]
fn reports_are_deterministic_across_runs_and_jobs() {
    let args = ["verify-paper", "--only", "curves", "--json"];
    let a = report(&lgp(&args)).without_timings();
    let b = report(&lgp(&args)).without_timings();
    assert_eq!(a, b);

    let base = ["verify-paper", "--bound", "3000", "--c-samples", "2", "--json"];
    let seq = report(&lgp(&base)).without_timings();
    let par = report(&lgp(&[&base[..], &["--jobs", "4"]].concat())).without_timings();
    assert_eq!(seq.checks, par.checks);
    let names: Vec<&str> = seq.checks.iter().map(|c| c.name.as_str()).collect();
    let first = |prefix: &str| names.iter().position(|n| n.starts_with(prefix)).unwrap();
    assert!(first("dynatomic/") < first("algorithm1-1-2"));
    assert!(first("algorithm1-4-2") < first("appendix-5-2/"));
    assert!(first("curves/") < first("density-sampled/"));
}

#[test]
fn failing_fixture_gives_exit_one_with_detail() {
    let dir = tempfile::tempdir().unwrap();
    let broken = APPENDIX_5_2.replacen("I = {2,3,5}", "I = {2,5}", 1);
    assert_ne!(broken, APPENDIX_5_2);
    fs::write(dir.path().join("appendix_5_2.txt"), broken).unwrap();
    let path = dir.path().to_str().unwrap();

    let o = lgp(&["verify-paper", "--only", "appendix-5-2", "--fixtures", path, "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let r = report(&o);
    assert_eq!(r.exit_code, 1);
    assert_eq!(r.summary.fail, 1);
    let bad = r.checks.iter().find(|c| c.status == Status::Fail).unwrap();
    assert_eq!(bad.name, "appendix-5-2/H11");
    assert!(!bad.detail.is_empty());

    // same directory through the environment
    let o = Command::new(env!("CARGO_BIN_EXE_lgp"))
        .args(["verify-paper", "--only", "appendix-5-2/H11"])
        .env("LGP_FIXTURES", path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL appendix-5-2/H11"));
}

#[test]
fn curves_verify_catches_a_wrong_point() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("curve_points.txt"), CURVE_POINTS.replace("1, 8, -2", "1, 8, -3")).unwrap();
    let o = lgp(&["curves", "verify", "--fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().any(|l| l.starts_with("FAIL curves/x-point(1,8,-3)")));

    let o = lgp(&["curves", "verify", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(report(&o).summary.fail, 0);
}

#[test]
fn algorithm1_verify_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cands.txt");
    fs::write(&file, APPENDIX_5_2).unwrap();
    let o = lgp(&["algorithm1", "--n", "5", "--s", "2", "--verify", file.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(report(&o).summary.pass, 12);

    let o = lgp(&["algorithm1", "--n", "3", "--s", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["class_count"], 9);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 0);

    let o = lgp(&["algorithm1", "--n", "4", "--s", "2"]);
    assert!(stdout(&o).contains("I = {2} | Z/2xZ/2 | order 4"));
}

#[test]
fn dynatomic_output() {
    let o = lgp(&["dynatomic", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x^2 + c + x + 1");

    let o = lgp(&["dynatomic", "--n", "3", "--c", "-7/4", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["degree"], 6);
    assert_eq!(v["c"], "-7/4");
    let phi = lgp_core::MPoly::parse(v["phi"].as_str().unwrap()).unwrap();
    assert_eq!(phi.degree_in("x"), 6);
    assert_eq!(phi.degree_in("c"), 0);
}

#[test]
fn density_subcommands() {
    let o = lgp(&["density", "sample", "--poly", "x^2+2*x-1", "--bound", "20000", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["excluded_primes"], serde_json::json!([2]));
    assert!((v["estimate"].as_f64().unwrap() - 0.5).abs() < 0.05);

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("v4.txt");
    fs::write(&file, "# two independent quadratics\n[V4]\n(1,2)\n(3,4)\n").unwrap();
    let o = lgp(&["density", "exact", "--group", file.to_str().unwrap(), "--points", "1,3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["density"], "3/4");
    assert_eq!(v["order"], "4");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify-paper", "--only", "no-such-check"][..],
        &["bogus"],
        &["dynatomic"],
        &["dynatomic", "--n", "2", "--c", "x"],
        &["density", "sample", "--poly", "x*y"],
        &["density", "exact", "--group", "/nonexistent/file", "--points", "1"],
        &["algorithm1", "--n", "5"],
        &["verify-paper", "--fixtures", "/nonexistent/dir"],
    ] {
        let o = lgp(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(lgp(&["--help"]).status.code(), Some(0));
}
