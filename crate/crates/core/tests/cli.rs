//! End-to-end checks of the command-line interface and its exit codes.

use std::fs;
use std::process::{Command, Output};

fn normlap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_normlap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn spectrum_of_p3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.txt");
    fs::write(&path, "0 1\n1 2\n").unwrap();
    let out = normlap(&["spectrum", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let spec_line = text.lines().find(|l| l.starts_with("spectrum:")).unwrap();
    let values: Vec<f64> = spec_line
        .trim_start_matches("spectrum: [")
        .trim_end_matches(']')
        .split(", ")
        .map(|t| t.parse().unwrap())
        .collect();
    for (got, want) in values.iter().zip([2.0, 1.0, 0.0]) {
        assert!((got - want).abs() <= 1e-9, "{}", text);
    }
    assert!(text.contains("R_-1: 1.000000000000000"), "{}", text);
}

#[test]
fn spectrum_rejects_disconnected_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "0 1\n2 3\n").unwrap();
    let out = normlap(&["spectrum", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not connected"));
}

#[test]
fn spectrum_rejects_missing_file() {
    let out = normlap(&["spectrum", "/nonexistent/file.txt"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bounds_json_roundtrips_and_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.txt");
    fs::write(&path, "0 1\n1 2\n2 3\n3 0\n").unwrap();
    let out = normlap(&["bounds", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["graph"]["n"], 4);
    assert!(v["flags"]["theorem"].as_bool().unwrap());
    assert_eq!(v["tolerance"], 1e-9);
    // Classical rho1 bound is one-sided.
    let classical = v["bounds"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["method"] == "classical" && b["index"] == 1)
        .unwrap();
    assert!(classical["upper"].is_null());
}

#[test]
fn bounds_csv_has_summary_row() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k5.txt");
    let out = normlap(&["gen", "complete", "5", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = normlap(&["bounds", path.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("graph,n,index,method,lower,upper,value,pass,margin_lower,margin_upper"));
    assert!(text.lines().last().unwrap().contains("summary"));
}

#[test]
fn gen_writes_expected_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.txt");
    let out = normlap(&["gen", "complete", "4", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), 6);

    let out = normlap(&["gen", "cycle", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 5);

    let out = normlap(&["gen", "cycle", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn gen_random_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for path in [&a, &b] {
        let out = normlap(&["gen", "random", "8", "0.4", "--seed", "42", "-o", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn verify_exhaustive_n4() {
    let out = normlap(&["verify", "--exhaustive", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("graphs checked: 38"), "{}", text);
    assert!(text.contains("violations: 0"), "{}", text);
}

#[test]
fn verify_requires_a_mode() {
    let out = normlap(&["verify"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_error_exits_one_help_exits_zero() {
    let out = normlap(&["bogus-subcommand"]);
    assert_eq!(out.status.code(), Some(1));
    let out = normlap(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
