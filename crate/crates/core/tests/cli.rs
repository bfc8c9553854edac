use std::process::{Command, Output};

use serde_json::Value;

fn uqsl2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uqsl2")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn parameter_errors_exit_two() {
    for args in [
        &["verify", "--p", "1"][..],
        &["idempotent", "--p", "3", "--s", "0", "--sign", "+"],
        &["idempotent", "--p", "3", "--s", "4", "--sign", "-"],
        &["table", "--p", "3", "--s", "3"],
        &["module", "--p", "3", "--s", "4", "--sign", "+"],
        &["idempotent", "--p", "3", "--s", "1", "--sign", "x"],
        &["nonsense"],
    ] {
        let o = uqsl2(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    assert_eq!(uqsl2(&["--help"]).status.code(), Some(0));
}

#[test]
fn slf_prints_total() {
    let o = uqsl2(&["slf", "--p", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "11\n");
    let j: Value = serde_json::from_slice(&uqsl2(&["slf", "--p", "3", "--full", "--format", "json"]).stdout).unwrap();
    assert_eq!(j["total"], 8);
    assert_eq!(j["full_algebra"], 8);
    assert_eq!(j["blocks"], serde_json::json!([1, 3, 3, 1]));
}

#[test]
fn idempotent_text() {
    let o = uqsl2(&["idempotent", "--p", "2", "--s", "2", "--sign", "+"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1/4*EF - 1/4*q*EFK - 1/4*EFK^2 + 1/4*q*EFK^3\n");
}

#[test]
fn table_json_labels_and_cells() {
    let o = uqsl2(&["table", "--p", "3", "--s", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j: Value = serde_json::from_slice(&o.stdout).unwrap();
    let labels: Vec<&str> = j["labels"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(labels, ["e_s^+", "X_0^+", "Y_0^+", "A_0^+", "e_{p-s}^-", "X_0^-", "Y_0^-", "A_0^-"]);
    assert_eq!(j["entries"][0][3], "A_0^+");
    assert_eq!(j["entries"][1][6], "A_0^-");
    let c = uqsl2(&["table", "--p", "3", "--s", "2", "--kind", "commutator"]);
    assert_eq!(c.status.code(), Some(0));
}

#[test]
fn casimir_matches_product() {
    let o = uqsl2(&["casimir", "--p", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["matches_product_formula"], true);
    assert_eq!(j["block_dimensions"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).sum::<u64>(), 16);
}

#[test]
fn module_relations_pass() {
    for args in [
        &["module", "--p", "3", "--s", "1", "--sign", "-"][..],
        &["module", "--p", "3", "--s", "3", "--sign", "+"],
        &["module", "--p", "4", "--s", "2", "--sign", "+", "--kind", "simple"],
    ] {
        let o = uqsl2(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(stdout(&o).ends_with("relations: pass\n"));
    }
}

#[test]
fn verify_fast_is_deterministic() {
    let a = uqsl2(&["verify", "--p", "2", "--format", "json"]);
    let b = uqsl2(&["verify", "--p", "2", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let j: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(j["slf_total"], 5);
}
