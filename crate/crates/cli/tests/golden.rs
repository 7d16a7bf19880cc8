//! Byte-exact pins on the public surface: file schemas and JSON reports.
//! Commands run with a temp working directory and relative paths so that the
//! command echo inside each report is stable.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_leibniz-ly")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn catalog_output_is_pinned() {
    let tmp = TempDir::new().unwrap();
    let out = run_in(tmp.path(), &["catalog", "leibniz2", "-o", "leibniz2.json"]);
    assert!(out.status.success());
    let written = fs::read_to_string(tmp.path().join("leibniz2.json")).unwrap();
    assert_eq!(written, golden("leibniz2.algebra.json"));
}

#[test]
fn to_ly_output_is_pinned() {
    let tmp = TempDir::new().unwrap();
    fs::write(tmp.path().join("leibniz2.json"), golden("leibniz2.algebra.json")).unwrap();
    let out = run_in(tmp.path(), &["to-ly", "leibniz2.json", "-o", "leibniz2_ly.json"]);
    assert!(out.status.success());
    let written = fs::read_to_string(tmp.path().join("leibniz2_ly.json")).unwrap();
    assert_eq!(written, golden("leibniz2.ly.json"));
}

#[test]
fn adjoint_output_is_pinned() {
    let tmp = TempDir::new().unwrap();
    fs::write(tmp.path().join("leibniz2.json"), golden("leibniz2.algebra.json")).unwrap();
    let out = run_in(tmp.path(), &["adjoint", "leibniz2.json", "-o", "adj.json"]);
    assert!(out.status.success());
    let written = fs::read_to_string(tmp.path().join("adj.json")).unwrap();
    assert_eq!(written, golden("leibniz2.adjoint.json"));
}

#[test]
fn check_report_json_is_pinned() {
    let tmp = TempDir::new().unwrap();
    fs::write(tmp.path().join("leibniz2.json"), golden("leibniz2.algebra.json")).unwrap();
    let out = run_in(
        tmp.path(),
        &["check-leibniz", "leibniz2.json", "--format", "json"],
    );
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("check_leibniz_report.json"));
}

#[test]
fn failing_check_report_json_is_pinned() {
    let tmp = TempDir::new().unwrap();
    fs::write(
        tmp.path().join("idem_raw.json"),
        "{\"kind\":\"leibniz\",\"dim\":1,\"name\":\"idempotent1\",\"product\":[[0,0,0,\"1\"]]}",
    )
    .unwrap();
    let out = run_in(
        tmp.path(),
        &["check-leibniz", "idem_raw.json", "--format", "json"],
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("check_fail_report.json"));
}

#[test]
fn equiv_report_json_is_pinned() {
    let tmp = TempDir::new().unwrap();
    fs::write(tmp.path().join("leibniz2.json"), golden("leibniz2.algebra.json")).unwrap();
    fs::write(tmp.path().join("adj.json"), golden("leibniz2.adjoint.json")).unwrap();
    let out = run_in(
        tmp.path(),
        &["equiv", "adj.json", "adj.json", "--format", "json"],
    );
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("equiv_self_report.json"));
}

#[test]
fn reports_are_identical_across_runs() {
    let tmp = TempDir::new().unwrap();
    fs::write(tmp.path().join("leibniz2.json"), golden("leibniz2.algebra.json")).unwrap();
    let first = run_in(tmp.path(), &["check-leibniz", "leibniz2.json", "--format", "json"]);
    let second = run_in(tmp.path(), &["check-leibniz", "leibniz2.json", "--format", "json"]);
    assert_eq!(first.stdout, second.stdout);
}
