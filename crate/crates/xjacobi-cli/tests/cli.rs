//! End-to-end runs of the `xjacobi` binary: documented outputs, exit codes and formats.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xjacobi")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn spectrum_example() {
    let out = run(&["spectrum", "11/2", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["v_max"], 2);
    assert_eq!(v["energies"], serde_json::json!(["-15", "-3", "1"]));
    assert_eq!(v["borderline"], true);
}

#[test]
fn zeros_example() {
    let out = run(&["zeros", "1", "1", "4", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!((v["left"].as_u64(), v["inside"].as_u64(), v["right"].as_u64()), (Some(1), Some(1), Some(0)));
    assert_eq!(v["pass"], true);
}

#[test]
fn jacobi_example_and_negative_rationals() {
    let v = json_of(&run(&["jacobi", "1", "0", "0"]));
    assert_eq!(v["coefficients"], serde_json::json!(["0", "1"]));
    let v = json_of(&run(&["jacobi", "2", "-1/2", "1/2"]));
    assert_eq!(v["coefficients"], serde_json::json!(["-3/8", "-3/4", "3/2"]));
}

#[test]
fn verification_failure_exits_one() {
    let out = run(&["zeros", "2", "1", "1/2", "1/2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["pass"], false);
}

#[test]
fn precondition_errors_exit_two_with_stderr_json() {
    let out = run(&["spectrum", "1", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let e: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(e["error"], "EmptySpectrum");
    let out = run(&["xr", "a", "1", "2", "11/2", "1/2"]);
    assert_eq!(out.status.code(), Some(2));
    let e: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(e["error"], "RangeViolation");
    let out = run(&["spectrum", "1", "2", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
    let e: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(e["error"], "usage");
}

#[test]
fn classify_reports_type_and_admissibility() {
    let v = json_of(&run(&["classify", "+", "+", "-", "1", "11/2", "1/2"]));
    assert_eq!(v["type"], "a");
    assert_eq!(v["energy"], "-80");
    assert_eq!(v["admissibility"]["admissible"], true);
}

#[test]
fn gram_csv_and_determinism() {
    let out = run(&["gram", "a", "1", "13/2", "1/2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("label,0,1,2\n"));
    let a = run(&["gram", "a", "1", "13/2", "1/2"]).stdout;
    let b = run(&["--sequential", "gram", "a", "1", "13/2", "1/2"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn floats_have_seventeen_significant_digits() {
    let out = run(&["cross-ortho", "11/2", "1/2", "1", "0", "1", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let i = text.find("\"max_error\":").unwrap() + "\"max_error\":".len();
    let num: String = text[i..].chars().take_while(|c| !matches!(c, ',' | '}')).collect();
    let mantissa = num.split('e').next().unwrap().trim_start_matches('-').replace('.', "");
    assert_eq!(mantissa.len(), 17, "{num}");
}

#[test]
fn coefficients_round_trip_exactly() {
    let v = json_of(&run(&["xmjacobi", "2", "1", "11/2", "1/2"]));
    assert_eq!(v["leading_matches"], true);
    for c in v["coefficients"].as_array().unwrap() {
        let s = c.as_str().unwrap();
        let r = xjacobi::rational::parse_rat(s).unwrap();
        assert_eq!(xjacobi::rational::fmt_rat(&r), s);
    }
}

#[test]
fn quad_level_env_var_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_xjacobi"))
        .args(["gram", "r", "0", "11/2", "1/2"])
        .env("XJACOBI_QUAD_LEVEL", "2")
        .output()
        .unwrap();
    assert_eq!(json_of(&out)["inputs"]["quad_levels"], 2);
}

#[test]
fn batch_mode_is_line_delimited() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_xjacobi"))
        .arg("batch")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"spectrum 11/2 1/2\n# comment\nzeros 1 1 4 1\nspectrum 1 2\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let lines: Vec<Value> =
        String::from_utf8(out.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["command"], "spectrum");
    assert_eq!(lines[1]["pass"], true);
    assert_eq!(lines[2]["error"], "EmptySpectrum");
}

#[test]
fn dump_samples_writes_csv_pairs() {
    let path = std::env::temp_dir().join(format!("xjacobi-samples-{}.csv", std::process::id()));
    let out = run(&["jacobi", "2", "1", "1", "--dump-samples", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let _ = std::fs::remove_file(&path);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "eta,value");
    assert_eq!(rows.len(), 202);
    let first: Vec<f64> = rows[1].split(',').map(|x| x.parse().unwrap()).collect();
    assert_eq!(first, vec![-1.0, 3.0]);
}

#[test]
fn potential_with_seed_and_fd() {
    let v = json_of(&run(&["potential", "--seed", "a,1", "13/2", "1/2"]));
    assert_eq!(v["seed_type"], "a");
    assert_eq!(v["analytic_energies"], serde_json::json!(["-25", "-9", "-1"]));
    let out = run(&["potential", "--seed", "a,1", "13/2", "1/2", "--fd", "0.001", "12", "2000"]);
    let v = json_of(&out);
    assert_eq!(v["fd"]["within_tolerance"], serde_json::json!([true, true, true]));
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["potential", "--seed", "c,0", "11/2", "1/2"]);
    assert_eq!(out.status.code(), Some(2));
}
