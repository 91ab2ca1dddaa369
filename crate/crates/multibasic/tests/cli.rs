//! End-to-end tests of the `multibasic` binary: output formats, exit
//! codes, the error object on stderr, and byte-for-byte determinism.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

const SQUARE: &str = r#"{"vertices": [[0,0],[1,0],[0,1],[1,1]]}"#;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_multibasic"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        // a run rejected during argument validation can exit before
        // reading stdin; only the resulting closed pipe is tolerated
        match child.stdin.as_mut().unwrap().write_all(text.as_bytes()) {
            Ok(()) => {}
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
            Err(e) => panic!("stdin write failed: {e}"),
        }
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).unwrap()
}

fn stderr_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stderr).unwrap()
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("multibasic-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn series_json_and_determinism() {
    let first = run(&["series", "-"], Some(SQUARE));
    assert!(first.status.success());
    let doc = stdout_json(&first);
    assert_eq!(doc["ambient_dim"], 2);
    let terms = doc["numerator"]["terms"].as_array().unwrap();
    assert!(terms.contains(&serde_json::json!([[1, 1, 2], "-1"])));
    let second = run(&["series", "-"], Some(SQUARE));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn series_pretty_shows_the_rational_function() {
    let output = run(&["series", "-", "--format", "pretty"], Some(SQUARE));
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains("(1 - q1*q2*t^2)"), "{text}");
}

#[test]
fn delta_lists_one_entry_per_vertex() {
    let output = run(&["delta", "-"], Some(SQUARE));
    assert!(output.status.success());
    let doc = stdout_json(&output);
    assert_eq!(doc["entries"].as_array().unwrap().len(), 4);
}

#[test]
fn poly_reports_total_degree() {
    let output = run(&["poly", "-"], Some(SQUARE));
    assert!(output.status.success());
    let doc = stdout_json(&output);
    assert_eq!(doc["total_degree"], 2);
    assert_eq!(doc["vertex_terms"].as_array().unwrap().len(), 4);
}

#[test]
fn eval_checks_against_enumeration() {
    let output = run(&["eval", "-", "--n", "2"], Some(SQUARE));
    assert!(output.status.success());
    assert_eq!(stdout_json(&output)["oracle_agrees"], true);

    let at_zero = run(&["eval", "-", "--n", "0"], Some(SQUARE));
    assert!(at_zero.status.success());
    assert!(stdout_json(&at_zero).get("oracle_agrees").is_none());

    let interior = run(&["eval", "-", "--n", "2", "--interior"], Some(SQUARE));
    assert!(interior.status.success());
    let doc = stdout_json(&interior);
    assert_eq!(doc["oracle_agrees"], true);
    assert_eq!(
        doc["value"]["numerator"]["terms"],
        serde_json::json!([[[1, 1], "1"]])
    );
}

#[test]
fn interior_eval_needs_a_positive_dilation() {
    let output = run(&["eval", "-", "--n", "0", "--interior"], Some(SQUARE));
    assert_eq!(output.status.code(), Some(2));
    assert_eq!(stderr_json(&output)["code"], "invalid-input");
}

#[test]
fn reciprocity_holds_on_the_square() {
    let output = run(&["reciprocity", "-", "--n", "2"], Some(SQUARE));
    assert!(output.status.success());
    assert_eq!(stdout_json(&output)["holds"], true);
}

#[test]
fn specialize_classical_and_q_analogue() {
    let classical = run(&["specialize", "-"], Some(SQUARE));
    assert!(classical.status.success());
    assert_eq!(stdout_json(&classical)["kind"], "classical");

    let weighted = run(&["specialize", "-", "--lambda", "1,2"], Some(SQUARE));
    assert!(weighted.status.success());
    let doc = stdout_json(&weighted);
    assert_eq!(doc["kind"], "q-ehrhart");
    assert_eq!(doc["lambda"], serde_json::json!([1, 2]));

    let collision = run(&["specialize", "-", "--lambda", "1,1"], Some(SQUARE));
    assert_eq!(collision.status.code(), Some(2));
    assert_eq!(stderr_json(&collision)["code"], "non-generic-linear-form");
}

#[test]
fn verify_exits_zero_when_every_check_passes() {
    let path = temp_file("square.json", SQUARE);
    let output = run(&["verify", path.to_str().unwrap(), "--bound", "2"], None);
    assert!(output.status.success());
    let doc = stdout_json(&output);
    assert_eq!(doc["all_passed"], true);
    assert_eq!(doc["checks"].as_array().unwrap().len(), 12);
}

#[test]
fn orthant_violations_are_machine_readable() {
    let output = run(&["poly", "-"], Some(r#"{"vertices": [[-1],[2]]}"#));
    assert_eq!(output.status.code(), Some(2));
    let doc = stderr_json(&output);
    assert_eq!(doc["code"], "negative-orthant-violation");
    assert_eq!(doc["datum"]["vertex"], 0);
}

#[test]
fn malformed_input_is_rejected() {
    let garbage = run(&["series", "-"], Some("not json"));
    assert_eq!(garbage.status.code(), Some(2));
    assert_eq!(stderr_json(&garbage)["code"], "invalid-input");

    let missing = run(&["series", "/nonexistent/polytope.json"], None);
    assert_eq!(missing.status.code(), Some(2));
    assert_eq!(stderr_json(&missing)["code"], "invalid-input");

    let not_a_vertex = run(&["series", "-"], Some(r#"{"vertices": [[0],[1],[2]]}"#));
    assert_eq!(not_a_vertex.status.code(), Some(2));
    assert_eq!(stderr_json(&not_a_vertex)["code"], "not-a-vertex");
}
