use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn wdcalc(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wdcalc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn rec_steinberg_three_from_file() {
    let out = wdcalc(&["rec", &fixture("steinberg3.json")], None);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["representation"]["terms"][0]["s"], 3);
    assert_eq!(v["certificate"]["verdict"], "Pure");
    assert!(v["convention"].as_str().unwrap().starts_with("q=4; w0=0"));
}

#[test]
fn stdin_and_file_agree() {
    let text = std::fs::read_to_string(fixture("s21.json")).unwrap();
    let a = wdcalc(&["specseq", "-"], Some(&text));
    let b = wdcalc(&["specseq", &fixture("s21.json")], None);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn error_codes_and_messages() {
    let parse = wdcalc(&["rec", "-"], Some("{not json"));
    assert_eq!(parse.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&parse.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "parse");

    let domain = wdcalc(&["rec", "-"], Some(r#"{"n": 3, "segments": [{"s": 1}]}"#));
    assert_eq!(domain.status.code(), Some(3));

    let weil = wdcalc(&["purity", &fixture("not_weil.json")], None);
    assert_eq!(weil.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&weil.stderr).unwrap();
    assert_eq!(err["error"]["message"], "eigenvalue 3 not a power of 2");

    let h = wdcalc(&["red", &fixture("s21.json"), "--h", "5"], None);
    assert_eq!(h.status.code(), Some(3));

    let missing = wdcalc(&["rec", "/nonexistent/input.json"], None);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn non_tempered_specseq_is_negative() {
    let out = wdcalc(
        &["--format", "text", "specseq", &fixture("nontempered.json")],
        None,
    );
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stdout)
        .contains("not degenerate at E1, certificate unavailable"));
}

#[test]
fn reconstruct_flag() {
    let out = wdcalc(
        &[
            "purity",
            &fixture("steinberg2_stripped.json"),
            "--reconstruct",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["certificate"]["verdict"], "Mixed");
    assert_eq!(v["reconstruction"]["certificate"]["verdict"], "Pure");
    assert_eq!(v["reconstruction"]["certificate"]["center"], "-1");
}

#[test]
fn flag_defaults_fill_missing_fields() {
    let out = wdcalc(
        &["rec", "-", "--w0", "-2", "--q", "9"],
        Some(r#"{"n": 1, "segments": [{"s": 1}]}"#),
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["representation"]["q"], 9);
    assert_eq!(v["representation"]["terms"][0]["weight"], "-2");
}

#[test]
fn reduced_verify_passes() {
    let out = wdcalc(
        &[
            "verify",
            "--max-n",
            "2",
            "--max-dim",
            "3",
            "--samples",
            "10",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 8);
}

#[test]
fn outputs_are_deterministic() {
    let a = wdcalc(&["red", &fixture("s21.json"), "--strata"], None);
    let b = wdcalc(&["red", &fixture("s21.json"), "--strata"], None);
    assert_eq!(a.stdout, b.stdout);
}
