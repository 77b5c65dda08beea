//! End-to-end checks of the command-line interface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scenrisk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn validate_ok() {
    let path = fixture("atoms.json");
    let out = run(&["validate", "--instance", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("ok"));
}

#[test]
fn validate_bad_instance_exits_3() {
    let dir = std::env::temp_dir().join("scenrisk-cli-bad.json");
    std::fs::write(
        &dir,
        std::fs::read_to_string(fixture("atoms.json")).unwrap().replace("3/10", "1/10"),
    )
    .unwrap();
    let out = run(&["validate", "--instance", dir.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("\"valid\":false"));
}

#[test]
fn evaluate_all_criteria() {
    let path = fixture("atoms.json");
    let out = run(&[
        "evaluate", "--instance", path.to_str().unwrap(), "--schedule", "0", "--alpha", "1/2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("expectation: 26"));
    assert!(text.contains("max: 36"));
    assert!(text.contains("var[1/2]: 29"));
    assert!(text.contains("cvar[1/2]: 34"));
}

#[test]
fn evaluate_single_criterion_json() {
    let path = fixture("atoms.json");
    let out = run(&[
        "evaluate", "--instance", path.to_str().unwrap(), "--schedule", "0",
        "--criterion", "cvar", "--alpha", "1/2", "--format", "json",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), r#"{"value":"34"}"#);
}

#[test]
fn bad_alpha_is_usage_error() {
    let path = fixture("atoms.json");
    let out = run(&[
        "evaluate", "--instance", path.to_str().unwrap(), "--schedule", "0",
        "--criterion", "var", "--alpha", "3/2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("\"kind\":\"usage\""));
    let out = run(&[
        "evaluate", "--instance", path.to_str().unwrap(), "--schedule", "0",
        "--criterion", "max", "--alpha", "1/2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_brute_json() {
    let path = fixture("atoms.json");
    let out = run(&[
        "solve", "--instance", path.to_str().unwrap(), "--algorithm", "brute",
        "--criterion", "exp", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["value"], "26");
    assert_eq!(v["certificate"]["kind"], "exact");
}

#[test]
fn reduce_then_solve_roundtrip() {
    let cnf = fixture("formula.cnf");
    let out_path = std::env::temp_dir().join("scenrisk-cli-gadget.json");
    let out = run(&[
        "reduce", "--gadget", "3sat-sumt", "--input", cnf.to_str().unwrap(),
        "--output", out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let threshold: f64 = String::from_utf8(out.stderr)
        .unwrap()
        .lines()
        .find_map(|l| l.strip_prefix("threshold: ").map(|t| t.parse().unwrap()))
        .unwrap();
    assert_eq!(threshold, 2.0);

    let out = run(&["validate", "--instance", out_path.to_str().unwrap()]);
    assert!(out.status.success());

    // The fixture formula is satisfiable, so the minmax optimum stays
    // within the threshold.
    let out = run(&[
        "solve", "--instance", out_path.to_str().unwrap(), "--algorithm", "brute",
        "--criterion", "max", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let value: f64 = {
        let s = v["value"].as_str().unwrap();
        match s.split_once('/') {
            Some((a, b)) => a.parse::<f64>().unwrap() / b.parse::<f64>().unwrap(),
            None => s.parse().unwrap(),
        }
    };
    assert!(value <= threshold);
}

#[test]
fn reduce_selection() {
    let sel = fixture("selection.json");
    let out = run(&[
        "reduce", "--gadget", "selection", "--input", sel.to_str().unwrap(),
        "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["instance"]["jobs"], 4);
}

#[test]
fn oracle_ratios_within_bound() {
    let out = run(&[
        "oracle", "--algorithm", "lp2", "--alpha", "1/4", "--count", "5", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for r in v["ratios"].as_array().unwrap() {
        let s = r.as_str().unwrap();
        let ratio = match s.split_once('/') {
            Some((a, b)) => a.parse::<f64>().unwrap() / b.parse::<f64>().unwrap(),
            None => s.parse().unwrap(),
        };
        assert!(ratio <= 2.0 + 1e-9);
    }
}

#[test]
fn missing_file_is_usage_error() {
    let out = run(&["validate", "--instance", "/nonexistent/nope.json"]);
    assert_eq!(out.status.code(), Some(2));
}
