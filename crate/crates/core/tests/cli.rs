use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const SESSION: &str = r#"
quiver Q { vertices: v; arrows: X: v -> v, Y: v -> v, Z: v -> v; }
algebra A over Q { relations: X*Y + Z^3; Y*X + Z^3; flavor: complete; }
grideal A degree=5;
spderiv Q "X^2*Y^2 - X*Y*X*Y";
preprojdim 2 3;
"#;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quivercone"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn json_report_has_one_entry_per_command() {
    let out = run(&[], SESSION);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 3);
    assert_eq!(reports[0]["command"], "grideal");
    assert_eq!(reports[0]["result"]["gradable"], false);
    assert_eq!(reports[1]["command"], "spderiv");
}

#[test]
fn output_is_deterministic() {
    let a = run(&[], SESSION);
    let b = run(&["-"], SESSION);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn text_output_of_cyclic_derivatives() {
    let src = "quiver Q { vertices: v; arrows: X: v -> v, Y: v -> v; }\nspderiv Q \"X^2*Y^2 - X*Y*X*Y\";\n";
    let out = run(&["--output", "text"], src);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for line in include_str!("golden/cyclic_derivatives.txt").lines() {
        assert!(text.lines().any(|l| l.trim() == line), "{text}");
    }
}

#[test]
fn empty_session_succeeds() {
    let out = run(&[], "");
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 0);
}

#[test]
fn syntax_error_exits_with_two() {
    let out = run(&[], "quiver Q { vertices: v; arrows: X: v -> ; }");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn failing_command_exits_with_one_and_still_reports() {
    let src = "quiver Q { vertices: v; arrows: X: v -> v; }\nspderiv Q \"X*Y\";\npreprojdim 1 1;\n";
    let out = run(&[], src);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert!(reports[0].get("error").is_some());
    assert!(reports[1].get("result").is_some());
}

#[test]
fn dot_output_for_double_quiver() {
    let src = "quiver Q { vertices: 1, 2; arrows: a: 1 -> 2; }\ndouble Q;\n";
    let out = run(&["--output", "dot"], src);
    assert_eq!(out.status.code(), Some(0));
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.contains("digraph"), "{dot}");
    assert!(dot.contains("a'"), "{dot}");
}

#[test]
fn bad_field_is_rejected() {
    let out = run(&["--field", "cyclo:x"], "");
    assert_eq!(out.status.code(), Some(2));
}
