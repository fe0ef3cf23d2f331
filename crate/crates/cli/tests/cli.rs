use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braid-gamma")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_braid-gamma"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn gamma_trefoil_text_and_json() {
    let o = run(&["gamma", "1 1 1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "Gamma = 1 + mu*z + z^2");

    let o = run(&["gamma", "1 1 1", "--format", "json"]);
    let v = &json_lines(&o)[0];
    assert_eq!(v["input"], "1 1 1");
    assert_eq!(v["strands"], 2);
    assert_eq!(v["exponent_sum"], 3);
    assert_eq!(v["components"], 1);
    assert_eq!(v["result"]["variables"], json!(["mu", "z"]));
    assert_eq!(v["result"]["terms"], json!([[0, 0, "1"], [1, 1, "1"], [0, 2, "1"]]));
}

#[test]
fn homfly_trefoil() {
    let o = run(&["homfly", "1 1 1", "--format", "json"]);
    let v = &json_lines(&o)[0];
    assert_eq!(v["result"]["variables"], json!(["v", "z"]));
    assert_eq!(v["result"]["terms"], json!([[2, 0, "2"], [4, 0, "-1"], [2, 2, "1"]]));
}

#[test]
fn triviality_report_fields() {
    let o = run(&["triviality", "1 1 1", "--max-degree", "2", "--format", "json"]);
    assert!(o.status.success());
    let v = &json_lines(&o)[0];
    assert_eq!(v["first_nonvanishing"], 2);
    assert_eq!(v["bennequin"], 1);
    assert_eq!(v["max_checked"], 2);

    let text = stdout(&run(&["triviality", "1 1 1", "--max-degree", "2"]));
    assert!(text.contains("first_nonvanishing = 2"));
    assert!(text.contains("bennequin = 1"));
}

#[test]
fn triviality_default_degree_is_max_of_strands_and_length() {
    let v = &json_lines(&run(&["triviality", "1 2 3 4", "--strands", "5", "--format", "json"]))[0];
    assert_eq!(v["max_checked"], 5);
    let v = &json_lines(&run(&["triviality", "1 1 1 1 1", "--format", "json"]))[0];
    assert_eq!(v["max_checked"], 5);
}

#[test]
fn bennequin_of_unknot() {
    let o = run(&["bennequin", "1", "--strands", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "-1");
}

#[test]
fn leading_negative_letter_is_a_braid_not_a_flag() {
    let o = run(&["alexander", "-1 2 -1 2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("Conway = 1 - z^2"));
}

#[test]
fn domain_error_exits_1_with_one_line() {
    let o = run(&["alexander", "1 1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(String::from_utf8(o.stderr).unwrap().lines().count(), 1);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["gamma", "1 x"]).status.code(), Some(2));
    assert_eq!(run(&["gamma", "3", "--strands", "2"]).status.code(), Some(2));
    assert_eq!(run(&["gamma", "1", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn batch_preserves_input_order() {
    let lines: Vec<String> = (1..=40).map(|k| vec!["1"; k].join(" ")).collect();
    let o = run_stdin(&["gamma", "--format", "json"], &(lines.join("\n") + "\n"));
    assert!(o.status.success());
    let out = json_lines(&o);
    assert_eq!(out.len(), lines.len());
    for (v, l) in out.iter().zip(&lines) {
        assert_eq!(v["input"], l.as_str());
    }
}

#[test]
fn batch_reports_failures_in_place() {
    let o = run_stdin(&["alexander", "--format", "json"], "1 1 1\n1 1\n\n-1 2 -1 2\n");
    assert_eq!(o.status.code(), Some(1));
    let out = json_lines(&o);
    assert_eq!(out.len(), 3);
    assert_eq!(out[0]["conway"]["terms"], json!([[0, "1"], [2, "1"]]));
    assert!(out[1]["error"].is_string());
    assert_eq!(out[2]["input"], "-1 2 -1 2");
}

#[test]
fn sweep_small() {
    let o = run(&["sweep", "--strands", "2", "--max-length", "5", "--format", "json"]);
    assert!(o.status.success());
    let v = &json_lines(&o)[0];
    assert_eq!(v["words"], 63);
    assert_eq!(v["counterexamples"], json!([]));

    let o = run(&["sweep", "--strands", "4", "--max-length", "9", "--samples", "200", "--seed", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("200 words"));
}

#[test]
fn dims_single_row() {
    let o = run(&["dims", "--strands", "3", "--max-degree", "4", "--samples", "100", "--format", "json"]);
    assert!(o.status.success());
    let rows = json_lines(&o);
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[4]["predicted"], 2);
    assert!(rows.iter().all(|r| r["matches"] == true));
}
