use std::process::Command;

use ncsphere_cli::commands::reduce;
use ncsphere_cli::run;
use ncsphere_cli::suites::suite_registry;
use serde_json::Value;

fn cli(args: &[&str]) -> (i32, String) {
    run(std::iter::once("ncsphere").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let (code, out) = cli(args);
    assert_eq!(code, 0, "{out}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn even_pairing_as_json() {
    let v = json(&["pairing", "--family", "even", "--n", "2", "--format", "json"]);
    assert_eq!(v["matrix"], serde_json::json!([[1, 2], [0, 1]]));
    assert_eq!(v["determinant"], 1);
}

#[test]
fn pairing_csv_has_header() {
    let (code, out) = cli(&["pairing", "--family", "even", "--n", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, "row,col,value\n0,0,1\n0,1,4\n1,0,0\n1,1,-1\n");
}

#[test]
fn odd_pairings() {
    for (n, v) in [("0", "-1"), ("1", "1"), ("2", "-1")] {
        assert_eq!(cli(&["pairing", "--family", "odd", "--n", n]), (0, format!("{v}\n")));
    }
}

#[test]
fn odd_integral_on_sq5() {
    assert_eq!(cli(&["integrate", "--sphere", "Sq5", "--a", "x1", "--b", "x1'"]), (0, "1/(1-q^-2)^2\n".into()));
}

#[test]
fn even_integral_on_sq4() {
    assert_eq!(cli(&["integrate", "--sphere", "Sq4", "--a", "x0"]), (0, "2/(1-q^-1)^2\n".into()));
    assert_eq!(cli(&["integrate", "--sphere", "Sq4", "--a", "x1"]), (0, "0\n".into()));
}

#[test]
fn integrate_odd_without_b_is_usage_error() {
    assert_eq!(cli(&["integrate", "--sphere", "Sq3", "--a", "x1"]).0, 2);
}

#[test]
fn reduce_matches_the_sphere_relation() {
    assert_eq!(cli(&["reduce", "--algebra", "Sq2", "--expr", "x1*x1'"]).0, 0);
    let lhs = reduce("Sq2", "x1*x1'").unwrap();
    let rhs = reduce("Sq2", "x1'*x1 + (1-q^-2)*x0^2").unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn reduce_in_theta_algebras() {
    assert_eq!(reduce("T2", "u1*u2").unwrap(), "L12*u2*u1");
    assert_eq!(reduce("Cliff2", "G1*G1'+G1'*G1").unwrap(), "1");
    assert_eq!(reduce("Stheta4", "z*a - a*z").unwrap(), "0");
    assert_eq!(cli(&["reduce", "--algebra", "Sq9", "--expr", "x0"]).0, 2);
    assert_eq!(cli(&["reduce", "--algebra", "Sq2", "--expr", "x1 +"]).0, 2);
}

#[test]
fn exact_and_numeric_trace() {
    assert_eq!(cli(&["trace", "--family", "even+", "--n", "2", "--expr", "x0"]), (0, "1/(1-q^-1)^2\n".into()));
    let v = json(&[
        "trace", "--family", "even+", "--n", "1", "--expr", "x0", "--q", "2", "--cutoff", "40", "--format", "json",
    ]);
    let (re, tail) = (v["re"].as_f64().unwrap(), v["tail_bound"].as_f64().unwrap());
    assert!((re - 2.0).abs() <= tail, "{re} {tail}");
}

#[test]
fn fourier_commutator_trace() {
    let (code, out) = cli(&["trace", "--family", "fourier", "--n", "1", "--expr", "x1'", "--with-f", "x1"]);
    assert_eq!((code, out.as_str()), (0, "2/(1-q^-2)\n"));
}

#[test]
fn chern_of_the_s_theta4_projection() {
    let v = json(&["chern", "--object", "st4-e", "--degree", "1", "--format", "json"]);
    assert_eq!(v["zero"], true);
    let v = json(&["chern", "--object", "theta-u", "--n", "2", "--degree", "1", "--format", "json"]);
    assert_eq!(v["zero"], false);
    assert_eq!(cli(&["chern", "--object", "w"]).0, 2);
}

#[test]
fn suites_named_in_the_registry() {
    let names: Vec<&str> = suite_registry().iter().map(|s| s.name).collect();
    for s in [
        "spheres-presentations",
        "unipotents",
        "ktheory-generators",
        "representations",
        "fredholm-cocycles",
        "pairings",
        "theta4",
        "theta-clifford",
        "twist-lemmas",
        "moyal",
        "poisson",
        "bicomplex",
    ] {
        assert!(names.contains(&s), "{s}");
    }
}

#[test]
fn unipotents_suite_passes() {
    let (code, out) = cli(&["verify", "--suite", "unipotents", "--n", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("PASS\n"));
}

#[test]
fn twist_suite_report_schema() {
    let v = json(&["verify", "--suite", "twist-lemmas", "--seed", "7", "--format", "json"]);
    assert_eq!(v["suite"], "twist-lemmas");
    assert_eq!(v["seed"], 7);
    assert_eq!(v["status"], "pass");
    let check = &v["checks"][0];
    assert_eq!(check["status"], "pass");
    assert!(check["witness"].is_string() && check["elapsed_ms"].is_u64());
}

#[test]
fn json_reports_are_deterministic_without_timing() {
    let args = ["verify", "--suite", "bicomplex", "--trials", "50", "--seed", "3", "--no-timing", "--format", "json"];
    let (a, b) = (cli(&args), cli(&args));
    assert_eq!(a, b);
    assert!(!a.1.contains("elapsed_ms"));
}

#[test]
fn clifford_alias_and_out_file() {
    let path = std::env::temp_dir().join(format!("ncsphere-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out) = cli(&["verify", "--suite", "clifford", "--n", "1", "--format", "json", "--out", p]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), out);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(cli(&["verify", "--suite", "bogus"]).0, 2);
    assert_eq!(cli(&["verify"]).0, 2);
    assert_eq!(cli(&["frobnicate"]).0, 2);
    assert_eq!(cli(&["pairing", "--family", "even", "--n", "x"]).0, 2);
    assert_eq!(cli(&["pairing", "--family", "sideways"]).0, 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ncsphere");
    let ok = Command::new(bin).args(["pairing", "--family", "odd", "--n", "1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "1\n");
    let bad = Command::new(bin).args(["verify", "--suite", "bogus"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("bogus"));
}
