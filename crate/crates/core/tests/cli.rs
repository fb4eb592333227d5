//! The hypertorsion binary: outputs, formats and exit codes.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypertorsion"))
        .args(args)
        .env_remove("HYPERTORSION_PRECISION")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn kostant_table() {
    let v = json(&["kostant", "--n", "1", "--tau", "2,1"]);
    assert_eq!(v["exact"]["casimir"], "9");
    assert_eq!(v["exact"]["casimir_identity"], true);
    let rows = v["table"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["sigma"], "(1)");
    assert_eq!(rows[0]["lambda"], "3");
    assert_eq!(rows[1]["sigma"], "(3)");
    assert_eq!(rows[1]["lambda"], "1");
}

#[test]
fn dim_and_casimir() {
    let v = json(&["dim", "--n", "2", "--role", "m", "--weight", "1,0"]);
    assert_eq!(v["exact"]["dim"], 4);
    let v = json(&["casimir", "--n", "2", "--role", "g", "--weight", "1,1,1"]);
    assert_eq!(v["exact"]["casimir"], "9");
}

#[test]
fn terms_have_no_cpsi() {
    let v = json(&["terms", "--n", "1", "--tau", "1,1", "--m", "2", "--cgamma", "0.3"]);
    assert!(v["exact"]["cpsi_coefficient"].as_object().unwrap().is_empty());
    assert_eq!(v["exact"]["MT"]["cgamma"], "1");
    assert!(v["excluded"].as_str().unwrap().contains("MH"));
}

#[test]
fn output_is_deterministic() {
    let args = ["terms", "--n", "2", "--tau", "1,1,1", "--m", "3", "--kappa", "2"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["--format", "csv", "l2", "--n", "1", "--tau", "1,1", "--m", "1..5"]);
    let d = run(&["--format", "csv", "l2", "--n", "1", "--tau", "1,1", "--m", "1..5"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn csv_table() {
    let out = run(&["--format", "csv", "l2", "--n", "1", "--tau", "1,1", "--m", "1..3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "m,poly,l2_at_vol_1");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("1,-74/3,"));
}

#[test]
fn precision_flag_and_env() {
    let v = json(&["--precision", "20", "calibrate", "--n", "1", "--tau", "1,1"]);
    let s = v.to_string();
    let out = Command::new(env!("CARGO_BIN_EXE_hypertorsion"))
        .args(["calibrate", "--n", "1", "--tau", "1,1"])
        .env("HYPERTORSION_PRECISION", "20")
        .output()
        .unwrap();
    let w: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(s, w.to_string());
    let default = json(&["calibrate", "--n", "1", "--tau", "1,1"]).to_string();
    assert_ne!(s, default);
}

#[test]
fn mode_filters_sections() {
    let v = json(&["--mode", "exact", "l2", "--n", "1", "--tau", "1,1", "--m", "2"]);
    assert!(v.get("numeric").is_none());
    let v = json(&["--mode", "numeric", "l2", "--n", "1", "--tau", "1,1", "--m", "2"]);
    assert!(v.get("exact").is_none());
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("hypertorsion-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k.json");
    let out = run(&["-o", path.to_str().unwrap(), "kostant", "--n", "1", "--tau", "2,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "kostant");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["kostant", "--n", "1", "--tau", "1,x"]).status.code(), Some(2));
    assert_eq!(run(&["kostant", "--n", "2", "--tau", "1,2,0"]).status.code(), Some(2));
    assert_eq!(run(&["dim", "--n", "1", "--role", "q", "--weight", "1"]).status.code(), Some(64));
    assert_eq!(run(&["--precision", "10", "dim", "--n", "1", "--role", "m", "--weight", "1"]).status.code(), Some(64));
    assert_eq!(run(&["terms", "--n", "1", "--parity", "even", "--tau", "1,1", "--m", "2"]).status.code(), Some(6));
    assert_eq!(run(&["terms", "--n", "1", "--tau", "1,1", "--m", "0"]).status.code(), Some(6));

    let dir = std::env::temp_dir().join(format!("hypertorsion-geo-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.csv");
    std::fs::File::create(&bad).unwrap().write_all(b"len,prim,theta\n1,1,0\n").unwrap();
    let out = run(&["hyperbolic", "--n", "1", "--tau", "1,1", "--m", "2", "--geodesics", bad.to_str().unwrap(), "--t", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let good = dir.join("good.csv");
    std::fs::File::create(&good).unwrap().write_all(b"length,prim_length,theta_1\n2.0,1.0,0.3\n").unwrap();
    let out = run(&["hyperbolic", "--n", "1", "--tau", "1,1", "--m", "2", "--geodesics", good.to_str().unwrap(), "--t", "0.5,1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    std::fs::remove_dir_all(&dir).unwrap();

    // an unreachable tolerance is reported with its own code
    let out = run(&["mellin-check", "--kind", "digamma", "--tol", "1e-30"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn mellin_check_passes_at_default_tolerances() {
    let v = json(&["mellin-check", "--kind", "pole"]);
    for row in v["table"].as_array().unwrap() {
        assert_eq!(row["status"], "PASS", "{row}");
    }
}
