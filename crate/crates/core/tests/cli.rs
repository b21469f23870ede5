use std::process::{Command, Output};

use serde_json::Value;

fn pellcf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pellcf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = pellcf(&full);
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is one JSON record");
    (v, out.status.code().unwrap())
}

#[test]
fn cf_prints_the_period() {
    let out = pellcf(&["cf", "14"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("a0=3 period=[1,2,1,6] l=4"));

    let (v, code) = json(&["cf", "14"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["payload"]["a0"], "3");
    assert_eq!(v["payload"]["period"], serde_json::json!(["1", "2", "1", "6"]));
}

#[test]
fn perfect_square_is_invalid_input() {
    assert_eq!(pellcf(&["cf", "16"]).status.code(), Some(2));
    let (v, code) = json(&["solve", "49", "1"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "invalid");
}

#[test]
fn solve_lists_solutions_as_strings() {
    let (v, code) = json(&["solve", "61", "1", "2"]);
    assert_eq!(code, 0);
    let sols = v["payload"]["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 2);
    assert_eq!(sols[0]["x"], "1766319049");
    assert_eq!(sols[0]["y"], "226153980");
}

#[test]
fn negative_rhs_is_parsed_as_a_value() {
    let out = pellcf(&["solve", "5", "-4", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("(1, 1)") && text.contains("(4, 2)") && text.contains("(11, 5)"));
}

#[test]
fn unsolvable_exits_three() {
    let (v, code) = json(&["solve", "3", "-1"]);
    assert_eq!(code, 3);
    assert_eq!(v["status"], "unsolvable");
    assert!(v["payload"]["reason"].as_str().unwrap().contains("period length even"));
}

#[test]
fn certify_reports_oracle_agreement() {
    let (v, code) = json(&["solve", "13", "-4", "2", "--certify", "--ymax", "2000"]);
    assert_eq!(code, 0);
    let oracle = &v["payload"]["oracle"];
    assert_eq!(oracle["agrees"], true);
    assert_eq!(oracle["y_max"], "2000");
}

#[test]
fn family_generator_and_nonexistence() {
    let (v, code) = json(&["family", "k2p4", "3", "-1", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["solutions"][1]["x"], "23382");

    let (v, code) = json(&["family", "k2m1", "5", "-1"]);
    assert_eq!(code, 3);
    assert_eq!(v["status"], "unsolvable");
}

#[test]
fn family_agrees_with_forced_generic() {
    let a = json(&["family", "k2p1", "2", "-4", "4"]).0;
    let b = json(&["family", "k2p1", "2", "-4", "4", "--force-generic"]).0;
    assert_eq!(a["payload"]["solutions"], b["payload"]["solutions"]);
}

#[test]
fn family_k_out_of_range() {
    assert_eq!(pellcf(&["family", "k2m4", "3", "1"]).status.code(), Some(2));
}

#[test]
fn verify_small_sweep() {
    let (v, code) = json(&["verify", "--kmax", "3", "--ymax", "2000"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["payload"]["sections"].as_array().unwrap().len(), 6);
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(pellcf(&["solve", "13", "3"]).status.code(), Some(64));
    assert_eq!(pellcf(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(pellcf(&["cf"]).status.code(), Some(64));
    assert_eq!(pellcf(&["--help"]).status.code(), Some(0));
}
