//! End-to-end checks of the binary: output shapes, exit codes, JSON schema.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gl11"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn alexander_trefoil_text() {
    let out = run(&["alexander", "--width", "2", "--word", "1 1 1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("t - 1 + t^-1"), "got: {text}");
    assert!(text.contains("up to units"));
}

#[test]
fn alexander_unlink_is_zero() {
    let out = run(&["alexander", "--width", "3", "--word", ""]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("delta = 0"));
}

#[test]
fn alexander_range_error_exits_1() {
    let out = run(&["alexander", "--width", "2", "--word", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));
}

#[test]
fn usage_error_exits_2() {
    let out = run(&["alexander", "--width", "2", "--word", "1", "--format", "yaml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn burau_block_text() {
    let out = run(&["burau", "--width", "2", "--word", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[0, 1]"), "got: {text}");
    assert!(text.contains("[t^-1, 1 - t^-1]"), "got: {text}");
}

#[test]
fn burau_mixed_colors_rejected() {
    let out = run(&["burau", "--width", "2", "--word", "1", "--colors", "1:0,2:0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn gassner_identity_word_is_identity_matrix() {
    let out = run(&["gassner", "--width", "2", "--word", "", "--colors", "1:0,2:0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[1, 0]"));
    assert!(text.contains("[0, 1]"));
}

#[test]
fn alexander_json_schema_round_trips() {
    let out = run(&[
        "alexander", "--width", "2", "--word", "1 1 1", "--format", "json", "--path", "both",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["width"], 2);
    assert_eq!(v["paths_agree"], true);
    let delta_t = v["delta_t"].as_array().expect("delta_t is a term list");
    assert_eq!(delta_t.len(), 3);
    for term in delta_t {
        assert!(term["exp"].is_array());
        assert!(term["coef"].is_string());
    }
}

#[test]
fn matrices_json_schema() {
    let out = run(&["matrices", "--width", "2", "--word", "1", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(v["dim"], 4);
    let entries = v["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    for e in entries {
        assert_eq!(e["row"].as_array().unwrap().len(), 2);
        assert_eq!(e["col"].as_array().unwrap().len(), 2);
    }
}

#[test]
fn verify_only_single_identity() {
    let out = run(&["verify", "--only", "crossing"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("PASS crossing"));
    assert_eq!(text.lines().count(), 1);
}

#[test]
fn verify_full_battery_deterministic() {
    let a = run(&["verify", "--samples", "5", "--width", "3", "--seed", "9"]);
    let b = run(&["verify", "--samples", "5", "--width", "3", "--seed", "9"]);
    assert!(a.status.success());
    // identical up to per-identity timing figures
    let strip = |s: &str| {
        s.lines()
            .map(|l| {
                let (head, tail) = l.split_once('(').unwrap();
                let (_, detail) = tail.split_once(')').unwrap();
                format!("{head}{detail}")
            })
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&stdout(&a)), strip(&stdout(&b)));
}

#[test]
fn verify_unknown_identity_rejected() {
    let out = run(&["verify", "--only", "nonsense"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn trace_compare_agrees() {
    let out = run(&["trace-compare", "--width", "3", "--word", "1 -2 1 -2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("paths agree: yes"));
}

#[test]
fn trace_compare_skips_wide_tensor() {
    let out = run(&["trace-compare", "--width", "15", "--word", "1 2 3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("skipped"));
}

#[test]
fn colored_alexander_multivariable() {
    // Hopf link with one variable per component
    let out = run(&[
        "alexander", "--width", "2", "--word", "1 1", "--colors", "1:0,2:0", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert!(v["delta_t"].is_null(), "multivariable output has no single-variable form");
    assert!(v["delta"].is_array());
}
