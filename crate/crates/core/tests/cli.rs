use std::process::{Command, Output};

use loglog_lab::report::Report;

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loglog-lab"))
        .args(args)
        .env_remove("LOGLOG_LAB_MAX_LEVEL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_json() {
    let o = lab(&["verify", "--id", "GR-4.325.1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report = Report::from_json(&stdout(&o)).unwrap();
    assert!(report.results[0].abs_error_qc.unwrap() <= 1e-9);
}

#[test]
fn domain_error_quotes_interval() {
    let o = lab(&["verify", "--id", "GR-4.325.7", "--param", "t=4.0"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("(−π, π)"), "{err}");
    assert!(err.contains("t"), "{err}");
}

#[test]
fn all_markdown() {
    let o = lab(&["all", "--format", "markdown"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.starts_with("| id | params | lhs | rhs | \\|Δ\\| | verdict |"));
    let rows = text.lines().filter(|l| l.ends_with("| pass |")).count();
    assert!(rows >= 40);
}

#[test]
fn injected_failure_exits_one() {
    let o = lab(&["all", "--threshold", "1e-15", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn env_max_level_validated() {
    let o = Command::new(env!("CARGO_BIN_EXE_loglog-lab"))
        .args(["verify", "--id", "GR-4.325.10"])
        .env("LOGLOG_LAB_MAX_LEVEL", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_loglog-lab"))
        .args(["list"])
        .env("LOGLOG_LAB_MAX_LEVEL", "deep")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let o = lab(&["all", "--no-timing", "--output", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    let ta = std::fs::read(&a).unwrap();
    let tb = std::fs::read(&b).unwrap();
    assert_eq!(ta, tb);
    let report = Report::from_json(std::str::from_utf8(&ta).unwrap()).unwrap();
    assert_eq!(report.summary.fail, 0);
}

#[test]
fn sweep_default_grid() {
    let o = lab(&["sweep", "--id", "GR-4.325.8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(Report::from_json(&stdout(&o)).unwrap().results.len(), 6);
}

#[test]
fn list_and_help() {
    let o = lab(&["list", "--format", "markdown"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("GR-4.229.7"));
    assert_eq!(lab(&["--help"]).status.code(), Some(0));
    assert_eq!(lab(&["frobnicate"]).status.code(), Some(2));
}
