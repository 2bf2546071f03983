//! End-to-end tests of the `covscan` binary.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_covscan"))
}

fn data(p: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(p)
        .display()
        .to_string()
}

fn with_data(cmd: &mut Command) -> &mut Command {
    cmd.arg("--catalog")
        .arg(data("groups.cat"))
        .arg("--fixtures")
        .arg(data("families.json"))
}

#[test]
fn selftest_succeeds() {
    let out = with_data(&mut bin()).arg("selftest").output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("catalog: 73 groups"));
    assert!(stdout.contains("families: 16 analyzed"));
}

#[test]
fn scan_tsv_reports_the_six_families() {
    let out = with_data(&mut bin())
        .args(["scan", "--gprime", "1", "--format", "tsv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let stars: Vec<&str> = stdout.lines().filter(|l| l.ends_with("\tSTAR")).collect();
    assert_eq!(stars.len(), 6, "{stdout}");
    assert!(stdout.contains("1\tQ8\t3\t1\t1\tSTAR"));
}

#[test]
fn scan_higher_base_genus_is_empty() {
    for gp in ["2", "3"] {
        let out = with_data(&mut bin())
            .args(["scan", "--gprime", gp, "--format", "tsv"])
            .output()
            .unwrap();
        assert!(out.status.success());
        let stdout = String::from_utf8(out.stdout).unwrap();
        assert!(!stdout.lines().any(|l| l.ends_with("\tSTAR")), "{stdout}");
        assert!(stdout.lines().filter(|l| !l.starts_with('#')).count() > 0);
    }
}

#[test]
fn scan_is_byte_deterministic() {
    let run = || {
        let out = with_data(&mut bin())
            .args(["scan", "--format", "json"])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn gmax_override_is_watermarked() {
    let out = with_data(&mut bin())
        .args(["scan", "--gprime", "1", "--gmax-override", "5", "--format", "tsv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("# NON-DEFAULT BOUNDS"));
}

#[test]
fn inclusions_dot_output() {
    let out = with_data(&mut bin())
        .args(["inclusions", "--format", "dot"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.contains("digraph genus3"));
    assert!(dot.contains("\"(9)\" -> \"(2e)\""));
}

#[test]
fn analyze_json_output() {
    let out = with_data(&mut bin())
        .args(["analyze", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("\"schema_version\": 1"));
    assert!(s.contains("\"label\": \"(5e)\""));
}

#[test]
fn missing_catalog_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .arg("--catalog")
        .arg(dir.path().join("nope.cat"))
        .arg("selftest")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn tampered_fixture_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(data("families.json")).unwrap();
    // corrupt one pinned expectation
    let bad = text.replacen("\"n_delta\": 2", "\"n_delta\": 3", 1);
    assert_ne!(bad, text);
    let path = dir.path().join("families.json");
    std::fs::write(&path, bad).unwrap();
    let out = bin()
        .arg("--catalog")
        .arg(data("groups.cat"))
        .arg("--fixtures")
        .arg(&path)
        .arg("analyze")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn bad_usage_exits_one() {
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}
