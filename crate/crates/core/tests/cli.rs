//! End-to-end checks of the command-line interface: exit codes, JSON shape,
//! and the round trip from emitted polynomial/interval back into a base spec.

use serde_json::Value;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_multibase"))
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let out = bin().args(args).output().expect("binary runs");
    let code = out.status.code().unwrap_or(-1);
    let stdout = String::from_utf8_lossy(&out.stdout);
    let v: Value = serde_json::from_str(stdout.trim()).unwrap_or_else(|e| {
        panic!("bad JSON from {args:?}: {e}\n{stdout}");
    });
    (code, v)
}

#[test]
fn q2_matches_reference_output() {
    let (code, v) = run_json(&["q2", "--M", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["poly"], "1,-3,-1");
    assert!(v["decimal"].as_str().unwrap().starts_with("3.30277563"));
}

#[test]
fn json_round_trips_through_base_spec() {
    let (_, v) = run_json(&["q2", "--M", "4"]);
    let spec = format!(
        "poly:{}@{}",
        v["poly"].as_str().unwrap(),
        v["interval"].as_str().unwrap()
    );
    let (code, a) = run_json(&["alpha", "--M", "4", "--base", &spec]);
    assert_eq!(code, 0);
    let (_, b) = run_json(&["alpha", "--M", "4", "--base", "q2:4"]);
    assert_eq!(a, b);
    assert_eq!(a["alpha"], "(30)");
}

#[test]
fn count_x1_is_exactly_one() {
    let (code, v) = run_json(&[
        "count", "--M", "2", "--base", "q2:2", "--x", "1(1)", "--depth", "64",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["kind"], "exactly");
    assert_eq!(v["result"]["count"], 1);
}

#[test]
fn count_of_one_is_undecided_under_require_exact() {
    let out = bin()
        .args([
            "count",
            "--M",
            "2",
            "--base",
            "q2:2",
            "--x",
            "1",
            "--depth",
            "40",
            "--require-exact",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["kind"], "at-least");
    assert!(v["result"]["count"].as_u64().unwrap() >= 20);
}

#[test]
fn unique_subcommand() {
    let (code, v) = run_json(&["unique", "--M", "2", "--base", "q2:2", "--seq", "001(1)"]);
    assert_eq!(code, 0);
    assert_eq!(v["unique"], true);
    let (_, v) = run_json(&["unique", "--M", "2", "--base", "q2:2", "--seq", "(10)"]);
    assert_eq!(v["unique"], false);
}

#[test]
fn catalog_subcommand() {
    let (code, v) = run_json(&[
        "catalog", "--M", "2", "--base", "q2:2", "--max-preperiod", "0",
    ]);
    assert_eq!(code, 0);
    let items: Vec<&str> = v["catalog"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap())
        .collect();
    assert!(items.contains(&"(0)"));
    assert!(items.contains(&"(2)"));
    assert!(items.contains(&"0(1)"));
}

#[test]
fn family_subcommand_with_root() {
    let (code, v) = run_json(&[
        "family", "--M", "2", "--variant", "even", "--k", "1", "--j", "0", "--u", "0", "--v",
        "0", "--root",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["has_root"], true);
    assert_eq!(v["root"]["poly"], "1,-2,-1");
    let (code, v) = run_json(&[
        "family", "--M", "4", "--variant", "even", "--k", "0", "--j", "0", "--u", "2", "--v",
        "2", "--value-at", "7/2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["has_root"], false);
    assert!(v["value_at"]["value"].as_str().is_some());
}

#[test]
fn enumerate_b2_m2() {
    let (code, v) = run_json(&["enumerate-b2", "--M", "2", "--sweep-k", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 1);
    assert_eq!(v["witnesses"][0]["base"]["poly"], "1,-2,-1");
    assert_eq!(v["witnesses"][0]["left"], "100(1)");
    assert_eq!(v["witnesses"][0]["right"], "02(1)");
}

#[test]
fn construct_xk_subcommand() {
    let (code, v) = run_json(&["construct-xk", "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["base"]["poly"], "1,-2,-1");
    assert!(v["x_decimal"].as_str().is_some());
}

#[test]
fn verify_suite_exit_codes() {
    let out = bin()
        .args(["verify", "--suite", "table1", "--format", "text"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 10);
    // unknown suite is an input error
    let out = bin().args(["verify", "--suite", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn errors_carry_machine_codes() {
    let out = bin()
        .args(["count", "--M", "2", "--base", "q2:2", "--x", "9"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(v["error"]["code"], "OutOfInterval");

    let out = bin()
        .args(["q2", "--M", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(v["error"]["code"], "InvalidInput");
}

#[test]
fn alpha_horizon_reports_undecided() {
    // q = 9/4 never repeats; without --require-exact this is still exit 0
    let (code, v) = run_json(&[
        "alpha", "--M", "2", "--base", "poly:4,-9@2:3", "--horizon", "12",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["decided"], false);
    assert_eq!(v["prefix"].as_str().unwrap().len(), 12);
    let out = bin()
        .args([
            "alpha",
            "--M",
            "2",
            "--base",
            "poly:4,-9@2:3",
            "--horizon",
            "12",
            "--require-exact",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn text_format_renders_lines() {
    let out = bin()
        .args(["q2", "--M", "2", "--format", "text"])
        .output()
        .unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("decimal: 2.4142135623"));
    assert!(text.contains("poly: 1,-2,-1"));
}

#[test]
fn digits_env_override() {
    let out = bin()
        .args(["q2", "--M", "2"])
        .env("MULTIBASE_DIGITS", "3")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["decimal"], "2.414");
}
