use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ramify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramify")).args(args).output().expect("binary runs")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn gauss_p5() -> Value {
    serde_json::from_slice(&ramify(&["catalog", "show", "gauss-p5"]).stdout).unwrap()
}

fn write(dir: &Path, name: &str, contents: &str) -> std::path::PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn malformed_json_is_a_schema_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "bad.json", "{\"name\": ");
    let out = ramify(&["check", path(&file)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn unknown_keys_and_non_canonical_scalars_are_schema_errors() {
    let dir = tempfile::tempdir().unwrap();
    let mut doc = gauss_p5();
    doc["unexpected"] = Value::from(1);
    let file = write(dir.path(), "unknown.json", &doc.to_string());
    assert_eq!(ramify(&["validate", path(&file)]).status.code(), Some(2));

    let mut doc = gauss_p5();
    doc["algebra"]["polynomial"]["modulus"][2] = Value::from("6");
    let file = write(dir.path(), "scalar.json", &doc.to_string());
    let out = ramify(&["validate", path(&file)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("canonical"));
}

#[test]
fn law_failures_are_validation_errors() {
    let dir = tempfile::tempdir().unwrap();
    let mut doc = gauss_p5();
    doc["coaction"]["group-action"]["generators"][0]["matrix"][1][1] = Value::from("2");
    let file = write(dir.path(), "law.json", &doc.to_string());
    let out = ramify(&["check", path(&file)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn missing_files_and_bad_usage_exit_one() {
    assert_eq!(ramify(&["check", "/nonexistent/doc.json"]).status.code(), Some(1));
    assert_eq!(ramify(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(ramify(&["--help"]).status.code(), Some(0));
}

#[test]
fn validate_summarises_the_document() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "g5.json", &gauss_p5().to_string());
    let out = ramify(&["validate", path(&file)]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["valid"], true);
    assert_eq!(v["hopf_dim"], 2);
    assert_eq!(v["algebra_dim"], 2);
}

#[test]
fn only_restricts_the_sections() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "g5.json", &gauss_p5().to_string());
    let out = ramify(&["check", "--only", "total-integral,torsor", path(&file)]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v.get("total_integral").is_some());
    assert!(v.get("torsor").is_some());
    assert!(v.get("slices").is_none());
    assert!(v.get("equivalence").is_none());
}

#[test]
fn saved_reports_audit_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write(dir.path(), "g5.json", &gauss_p5().to_string());
    let out = ramify(&["check", path(&doc)]);
    assert!(out.status.success());
    let report = write(dir.path(), "report.json", &String::from_utf8(out.stdout.clone()).unwrap());
    assert!(ramify(&["audit", path(&doc), path(&report)]).status.success());

    let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
    v["total_integral"]["tame"] = Value::from(false);
    let tampered = write(dir.path(), "tampered.json", &v.to_string());
    assert_eq!(ramify(&["audit", path(&doc), path(&tampered)]).status.code(), Some(3));

    let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
    v["digest"] = Value::from("00");
    let tampered = write(dir.path(), "digest.json", &v.to_string());
    assert_eq!(ramify(&["audit", path(&doc), path(&tampered)]).status.code(), Some(3));
}

#[test]
fn text_format_renders() {
    let out = ramify(&["--format", "text", "catalog", "run", "gauss-p2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("gauss-p2"));
}
