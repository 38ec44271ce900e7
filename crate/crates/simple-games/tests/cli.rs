//! End-to-end runs of the binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_simple-games"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("JSON output")
}

#[test]
fn classify_majority_of_three() {
    let o = run(
        &["classify", "--json"],
        r#"{"carrier":3,"winning":["110","101","011","111"]}"#,
    );
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["type"], 1);
    assert_eq!(v["weak"], false);
}

#[test]
fn classify_accepts_determining_strings() {
    let o = run(
        &["classify", "--json"],
        r#"{"kind":"finite","T0":["0"],"T1":["1"]}"#,
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["type"], 2);
}

#[test]
fn eval_variant_and_exception_games() {
    let o = run(&["eval", "1000:0"], r#"{"kind":"variant","type":12}"#);
    assert_eq!(stdout(&o).trim(), "winning");
    let o = run(&["eval", "1011:0"], r#"{"kind":"variant","type":12}"#);
    assert_eq!(stdout(&o).trim(), "losing");
    let game = r#"{"kind":"exception","type":7,"A":{"prefix":"00","tail":1}}"#;
    assert_eq!(stdout(&run(&["eval", "00:1"], game)).trim(), "winning");
    assert_eq!(stdout(&run(&["eval", "11:0"], game)).trim(), "losing");
}

#[test]
fn eval_machine_coalition() {
    let o = run(
        &["eval", r#"{"program":["inc 1","halt 1"]}"#],
        r#"{"kind":"omega","A":{"prefix":"","tail":1}}"#,
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "winning");
}

#[test]
fn gen_t_snapshot_shape() {
    let o = run(&["gen-T", "--A", ":1", "--stages", "10", "--json"], "");
    let v = json(&o);
    assert_eq!(v["stages"], 10);
    assert_eq!(v["T0"].as_array().unwrap().len(), 1008);
    assert_eq!(v["T1"].as_array().unwrap().len(), 1008);
}

#[test]
fn witnesses_and_noncomputable_games() {
    let o = run(&["witness", "nonweak", "--json"], "");
    assert!(o.status.success());
    assert_eq!(json(&o)["verified"], true);
    let o = run(&["witness", "carrier", "--json"], "");
    assert!(o.status.success());
    let v = json(&o);
    assert!(v["escapes"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["verified"] == true));
    let o = run(&["noncomp", "--type", "7", "--json"], "");
    assert_eq!(json(&o)["precondition"], true);
}

#[test]
fn variant_bundle_verifies() {
    let o = run(&["variant", "--type", "15", "--json"], "");
    assert!(o.status.success());
    assert_eq!(json(&o)["witnesses"]["all_verified"], true);
}

#[test]
fn table_rows() {
    let o = run(&["table", "--carrier", "3", "--json"], "");
    let rows = json(&o);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 16);
    assert_eq!(rows[1]["finite_computable"]["exists"], true);
    assert_eq!(rows[1]["infinite_computable"]["exists"], false);
    assert_eq!(rows[0]["infinite_noncomputable"]["exists"], true);
    for t in [6, 8, 10, 14, 16] {
        assert_eq!(rows[t - 1]["finite_computable"]["exists"], false);
    }
}

#[test]
fn verify_is_deterministic_and_rejects_unknown_suites() {
    let a = run(&["verify", "noncomp", "--seed", "4"], "");
    let b = run(&["verify", "noncomp", "--seed", "4"], "");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let bad = run(&["verify", "unknown"], "");
    assert!(!bad.status.success());
}

#[test]
fn program_round_trip() {
    let o = run(&["program", "--set", "101:0"], "");
    let code = stdout(&o).trim().to_string();
    let o = run(&["program", &code, "--inputs", "5", "--json"], "");
    assert_eq!(json(&o)["outputs"], serde_json::json!([1, 0, 1, 0, 0]));
}
