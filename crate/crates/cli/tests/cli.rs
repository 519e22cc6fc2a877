use std::process::{Command, Output};

use serde_json::Value;

fn semiclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semiclass"))
        .args(args)
        .env_remove("SEMICLASS_SEED")
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = semiclass(&all);
    let v = serde_json::from_slice(&out.stdout).expect("JSON report");
    (v, out.status.code().unwrap())
}

#[test]
fn divisorial_ideal_is_unchanged_by_v() {
    let (r, code) = report(&["sgp", "ideal", "--sgp", "2,3", "--gens", "2,3", "--op", "v"]);
    assert_eq!(code, 0);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["results"]["unchanged"], true);
    assert_eq!(r["results"]["summary"]["divisorial"], true);
}

#[test]
fn naturals_are_integrally_closed() {
    let (r, code) = report(&["sgp", "info", "--sgp", "1"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["integrally_closed"], true);
    assert_eq!(r["results"]["gaps"], serde_json::json!([]));
}

#[test]
fn search_is_repeatable() {
    let args = ["sgp", "search", "--sgp", "3,5", "--bound", "12"];
    let (mut a, code) = report(&args);
    let (mut b, _) = report(&args);
    assert_eq!(code, 0);
    a["elapsed_ms"] = Value::Null;
    b["elapsed_ms"] = Value::Null;
    assert_eq!(a, b);
    assert_eq!(a["results"]["found"], Value::Null);
}

#[test]
fn binary_ops_need_a_second_ideal() {
    let out = semiclass(&[
        "sgp", "ideal", "--sgp", "3,5", "--gens", "0,2", "--op", "sum",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let (r, code) = report(&[
        "sgp", "ideal", "--sgp", "3,5", "--gens", "0,2", "--with", "0,1", "--op", "colon",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["checks"][0]["status"], "pass");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(semiclass(&["demo", "nope"]).status.code(), Some(2));
    assert_eq!(
        semiclass(&["sgp", "info", "--sgp", "2,x"]).status.code(),
        Some(2)
    );
    assert_eq!(
        semiclass(&["sgp", "ideal", "--sgp", "p^inf:2", "--gens", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        semiclass(&["sgp", "info", "--sgp", "1", "--domain", "Z[sqrt(5)]"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn criterion_with_a_domain() {
    let (r, code) = report(&["sgp", "info", "--sgp", "p^inf:2", "--domain", "Z[sqrt(-5)]"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["criterion"]["holds"], true);
    assert_eq!(r["results"]["criterion"]["coefficient_class_group"], "Z/2Z");
}

#[test]
fn cited_demo_is_skipped_not_failed() {
    let (r, code) = report(&["demo", "ex216"]);
    assert_eq!(code, 0);
    assert_eq!(r["checks"][0]["status"], "skipped");
    assert_eq!(r["results"]["status"], "cited, not computed");
}

#[test]
fn suite_filters_and_writes_json() {
    let dir = std::env::temp_dir().join(format!("semiclass-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let out = semiclass(&[
        "suite",
        "--only",
        "semigroup",
        "--trials",
        "20",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let r: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(r["schema"], 1);
    assert_eq!(r["command"], "suite");
    assert_eq!(r["inputs"]["suites"], serde_json::json!(["semigroup"]));
    let checks = r["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks
        .iter()
        .all(|c| c["name"].as_str().unwrap().starts_with("semigroup: ")));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn seed_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_semiclass"))
        .args(["demo", "ex112", "--json"])
        .env("SEMICLASS_SEED", "42")
        .output()
        .unwrap();
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["seed"], 42);
    let (r, _) = report(&["demo", "ex112", "--seed", "5"]);
    assert_eq!(r["seed"], 5);
}

#[test]
fn text_output_lists_checks() {
    let out = semiclass(&["demo", "ex112"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS exactly 2 reduced forms of discriminant -20"));
    assert!(text.ends_with("4 passed, 0 failed, 0 skipped\n"));
}
