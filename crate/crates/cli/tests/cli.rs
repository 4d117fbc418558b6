use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::TempDir;

const EXAMPLE: &str = "1' 1 2' 2 2\n2' 2 3' 3\n3' 3\n";
const IMAGE: &str = "1' 2' 3' 1 2\n2' 2 2 3\n3' 3\n";

fn shiftedq() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_shiftedq"));
    c.env_remove("SHIFTEDQ_TRUNC");
    c
}

fn run(args: &[&str]) -> Output {
    shiftedq().args(args).output().expect("spawn")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = shiftedq()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().expect("wait")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn words(s: &str) -> Vec<Vec<&str>> {
    s.lines().map(|l| l.split_whitespace().collect()).collect()
}

fn same_cells(a: &str, b: &str) -> bool {
    words(a) == words(b)
}

#[test]
fn shifted_hook_table() {
    let o = run(&["shape", "--strict", "4,2,1", "--show", "hooks"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("6 5 4 1\n  3 2\n    1\n"), "{}", stdout(&o));
    let v = json(&["shape", "--strict", "4,2,1"]);
    assert_eq!(v["hooks"], serde_json::json!([[6, 5, 4, 1], [3, 2], [1]]));
    assert_eq!(v["contents"], serde_json::json!([[0, 1, 2, 3], [0, 1], [0]]));
    assert_eq!(v["double"], serde_json::json!([5, 4, 4, 1]));
}

#[test]
fn ordinary_shape() {
    let v = json(&["shape", "--partition", "3,1", "--show", "hooks,frobenius"]);
    assert_eq!(v["hooks"], serde_json::json!([[4, 2, 1], [1]]));
    assert_eq!(v["frobenius"]["alpha"], serde_json::json!([2]));
    assert_eq!(v["frobenius"]["beta"], serde_json::json!([1]));
}

#[test]
fn non_strict_shape_is_a_usage_error() {
    let o = run(&["shape", "--strict", "3,3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not strictly decreasing"));
    assert_eq!(run(&["mult", "--shape", "2,2,1"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn forward_bijection_on_the_worked_example() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("t.txt");
    fs::write(&path, EXAMPLE).unwrap();
    let o = run(&["bijection", "--forward", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(same_cells(&stdout(&o), IMAGE), "{}", stdout(&o));

    let o = run_stdin(&["bijection", "--stages", "-"], EXAMPLE);
    let text = stdout(&o);
    assert!(text.contains("T^1\n1'  1\n"), "{text}");
    assert!(text.contains("T^3"));
}

#[test]
fn inverse_bijection_with_trace() {
    let o = run_stdin(&["--json", "bijection", "--inverse", "--trace"], IMAGE);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["direction"], "inverse");
    assert_eq!(v["output"]["rows"][0], serde_json::json!(["1'", "1", "2'", "2", "2"]));
    assert_eq!(v["trace"].as_array().unwrap().len(), 3);
}

#[test]
fn invalid_tableau_input() {
    let o = run_stdin(&["bijection"], "1 1'\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("(M1)"));

    let o = run_stdin(&["tableaux", "validate"], "1 1'\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("(M1)"));
    let o = run_stdin(&["tableaux", "validate", "--kind", "colored"], IMAGE);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn tableau_counts() {
    let v = json(&[
        "tableaux",
        "enumerate",
        "--shape",
        "2,1",
        "--max-letter",
        "2",
        "--count",
    ]);
    assert_eq!(v["count"], 8);
    assert!(v.get("tableaux").is_none());
    let c = json(&[
        "tableaux",
        "enumerate",
        "--shape",
        "2,1",
        "--max-letter",
        "2",
        "--kind",
        "colored",
    ]);
    assert_eq!(c["count"], 8);
    assert_eq!(c["tableaux"].as_array().unwrap().len(), 8);
}

#[test]
fn q_basis_expansion() {
    let o = run(&["qfun", "expand", "--nu", "2,1"]);
    assert_eq!(stdout(&o), "q(2,1) = 2Q(3) + Q(2,1)\n");
    let v = json(&["qfun", "ch", "--n", "3", "--degree", "1"]);
    assert_eq!(v["degree"], 3);
    let o = run(&["qfun", "eval", "--shape", "2,1", "--at", "1,1/2,3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("agreement: yes"));
    assert!(run(&["qfun", "cauchy", "--n", "3", "--vars", "2"]).status.success());
}

#[test]
fn principal_specialization_report() {
    let v = json(&["specialize", "--shape", "3,1", "--trunc", "10"]);
    assert_eq!(v["agree"], true);
    assert_eq!(v["hook"], v["tableau"]);
    assert_eq!(v["hook"]["trunc"], 10);
}

#[test]
fn truncation_from_environment() {
    let o = shiftedq()
        .env("SHIFTEDQ_TRUNC", "5")
        .args(["--json", "specialize", "--shape", "2"])
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["trunc"], 5);
    assert_eq!(json(&["specialize", "--shape", "2"])["trunc"], 24);
}

#[test]
fn multiplicities() {
    let o = run(&["mult", "--shape", "2,1", "--module", "coinv"]);
    assert_eq!(stdout(&o), "hc coinv (2,1): 2t + 2t^2\n");
    let o = run(&["mult", "--shape", "2,1", "--module", "coinv", "--algebra", "spin"]);
    assert_eq!(stdout(&o), "spin coinv (2,1): t + t^2\n");
    let o = run(&["mult", "--shape", "3", "--module", "wedge"]);
    assert_eq!(stdout(&o), "hc wedge (3): 1 + 2s + 2s^2 + s^3\n");
    let v = json(&["mult", "--shape", "2,1", "--module", "bigraded", "--trunc", "4"]);
    assert_eq!(v["module"], "bigraded");
}

#[test]
fn classical_report() {
    let v = json(&["classical", "--shape", "4", "--trunc", "8"]);
    assert_eq!(v["agree"], true);
    assert!(v.get("solomon").is_some());
    let v = json(&["classical", "--shape", "2,2", "--trunc", "8"]);
    assert_eq!(v["agree"], true);
}

#[test]
fn quick_verification_and_output_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("report.json");
    let o = run(&["verify", "--level", "quick", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).lines().take(12).all(|l| l.starts_with("PASS")));
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["level"], "quick");
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "tableaux", "enumerate", "--shape", "3,1", "--max-letter", "3"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
