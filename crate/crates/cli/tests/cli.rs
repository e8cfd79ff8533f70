use std::process::{Command, Output};

use serde_json::Value;

fn alia(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alia")).args(args).env_remove("ALIA_TOL").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn assert_schema(v: &Value) {
    assert!(v["suite"].is_string());
    assert!(v["env"].is_object());
    for c in v["cases"].as_array().unwrap() {
        assert!(c["name"].is_string());
        let (r, tol) = (c["max_abs_residual"].as_f64().unwrap(), c["tol"].as_f64().unwrap());
        assert_eq!(c["pass"].as_bool().unwrap(), r < tol, "{c}");
        assert!(c["samples"].is_u64() && c["seed"].is_u64());
    }
}

#[test]
fn verify_all_passes_at_i() {
    let out = alia(&["verify", "--suite", "all", "--tau", "i", "--samples", "100", "--seed", "7", "--tol", "1e-9"]);
    let v = json(&out);
    assert_schema(&v);
    let failing: Vec<_> = v["cases"].as_array().unwrap().iter().filter(|c| c["pass"] == false).collect();
    assert!(failing.is_empty(), "{failing:#?}");
    assert_eq!(out.status.code(), Some(0));
    let names: Vec<&str> = v["cases"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"holod split degenerate detected"));
}

#[test]
fn holod_at_i_reports_degenerate_modulus() {
    let out = alia(&["verify", "--suite", "holod", "--tau", "i", "--samples", "20"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("degenerate modulus"), "{err}");
    assert_schema(&json(&out));
}

#[test]
fn holod_at_2i_passes() {
    let out = alia(&["verify", "--suite", "holod", "--tau", "2i", "--samples", "20"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "--suite", "theta", "--tau", "0.3+0.9i", "--samples", "20", "--seed", "3"];
    let (a, b) = (alia(&args), alia(&args));
    assert_eq!(a.stdout, b.stdout);
    let other = alia(&["verify", "--suite", "theta", "--tau", "0.3+0.9i", "--samples", "20", "--seed", "4"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn tolerance_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_alia"))
        .args(["verify", "--suite", "uglov", "--tau", "2i", "--samples", "10"])
        .env("ALIA_TOL", "1e-40")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["env"]["tol"], "1e-40");
    assert!(v["cases"].as_array().unwrap().iter().all(|c| c["tol"].as_f64() == Some(1e-40)));

    let bad = Command::new(env!("CARGO_BIN_EXE_alia"))
        .args(["verify", "--suite", "uglov", "--tau", "2i"])
        .env("ALIA_TOL", "tiny")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn tau_solve_square_lattice() {
    let out = alia(&["tau-solve", "--r", "2,1,0"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert_eq!(s.trim(), "0.0+1.0i");
    let out = alia(&["tau-solve", "--r", "-1,0,3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(alia(&["tau-solve", "--r", "1,1,0"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--suite", "nope"][..],
        &["verify", "--suite", "theta", "--format", "xml"],
        &["verify", "--suite", "theta", "--tau", "0.01i"],
        &["verify", "--suite", "theta", "--tau", "-i"],
        &["verify", "--suite", "theta", "--tol", "-1"],
        &["eval", "--fn", "theta", "--index", "5", "--tau", "i", "--z", "0.1"],
        &["eval", "--fn", "theta", "--tau", "i", "--z", "zz"],
        &["frobnicate"],
    ] {
        assert_eq!(alia(args).status.code(), Some(2), "{args:?}");
    }
    let out = alia(&["verify", "--suite", "theta", "--tau", "0.01i"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("0.01"));
}

#[test]
fn eval_prints_one_value() {
    let out = alia(&["eval", "--fn", "theta", "--index", "3", "--tau", "i", "--z", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert_eq!(s.lines().count(), 1);
    // θ₃(0|i) = π^{1/4}/Γ(3/4)
    let re: f64 = s.trim().strip_suffix("+0.0i").unwrap().parse().unwrap();
    assert!((re - 1.086_434_811_213_308).abs() < 1e-14);
    let pole = alia(&["eval", "--fn", "mu", "--index", "1", "--tau", "i", "--z", "0.5"]);
    assert_eq!(pole.status.code(), Some(1));
}

#[test]
fn table_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let out = alia(&[
        "table",
        "--fn",
        "wp",
        "--tau",
        "2i",
        "--samples",
        "12",
        "--seed",
        "5",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("z_re,z_im,value_re,value_im"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 12);
    // each row re-evaluates to the printed value
    let row = &rows[0];
    let z = format!("{:?}{:+?}i", row[0], row[1]);
    let v = alia(&["eval", "--fn", "wp", "--tau", "2i", "--z", &z]);
    let printed = String::from_utf8(v.stdout).unwrap();
    assert!(printed.starts_with(&format!("{:?}", row[2])), "{printed} vs {row:?}");
}

#[test]
fn report_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = alia(&["verify", "--suite", "qring", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let json_again = alia(&["report", "--input", path.to_str().unwrap()]);
    assert_eq!(json_again.stdout, std::fs::read(&path).unwrap());
    let csv = alia(&["report", "--input", path.to_str().unwrap(), "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.starts_with("name,max_abs_residual,tol,pass,samples,seed\n"));
    assert_eq!(csv.status.code(), Some(0));
    assert_eq!(alia(&["report", "--input", "/nonexistent/r.json"]).status.code(), Some(2));
}
