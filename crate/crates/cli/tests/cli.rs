use std::path::Path;
use std::process::{Command, Output};

use amenability_core::families::dihedral;
use amenability_core::group::CayleyFile;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_amenability")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn write_table(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.display().to_string()
}

fn s3_table(dir: &Path) -> String {
    let body = serde_json::to_string(&CayleyFile::from_group(&dihedral(3).unwrap())).unwrap();
    write_table(dir, "S3-table.json", &body)
}

#[test]
fn report_heisenberg() {
    let out = run(&["report", "--group", "Hr(3,1)"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["am"], "7/3");
    assert_eq!(v["bounds"]["upper"], 3);
    assert_eq!(v["spectrum"], serde_json::json!([[1, 9], [3, 2]]));
}

#[test]
fn report_cyclic_and_formats() {
    assert_eq!(json(&run(&["report", "--group", "C(5)"]))["am"], "1");
    let csv = String::from_utf8(run(&["report", "--group", "D(4)", "--format", "csv"]).stdout).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert!(lines[0].starts_with("group,order,am,ad,bounds_lower,bounds_upper,bounds_improved,nu_omega"));
    assert!(lines[1].starts_with("D(4),8,3/2,3/2,3/2,2,3/2,1/2,2,2,4,1:4;2:1,false,false,true,true"));
    let text = String::from_utf8(run(&["report", "--group", "Hr(3,2)", "--format", "text"]).stdout).unwrap();
    assert!(text.contains("7/3 (~2.33333)"));
}

#[test]
fn report_from_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = s3_table(dir.path());
    let v = json(&run(&["report", "--table", &path]));
    assert_eq!(v["am"], "5/3");
    assert_eq!(v["group"], "S3-table.json");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_table(dir.path(), "bad.json", r#"{"order": 2, "table": [[0, 1], [1, 1]]}"#);
    assert_eq!(run(&["report", "--table", &bad]).status.code(), Some(2));
    let ragged = write_table(dir.path(), "ragged.json", r#"{"order": 2, "table": [[0, 1], [1]]}"#);
    assert_eq!(run(&["report", "--table", &ragged]).status.code(), Some(2));
    assert_eq!(run(&["report", "--table", "/nonexistent/x.json"]).status.code(), Some(2));
    assert_eq!(run(&["report", "--group", "D(4"]).status.code(), Some(2));
    assert_eq!(run(&["report", "--group", "Hr(4,1)"]).status.code(), Some(2));
    assert_eq!(run(&["report", "--group", "C(3)", "--table", &bad]).status.code(), Some(2));
    assert_eq!(run(&["report"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense", "--group", "C(3)"]).status.code(), Some(2));
    assert_eq!(run(&["report", "--group", "C(100)", "--max-order", "50"]).status.code(), Some(3));
    assert_eq!(run(&["report", "--group", "C(2)xC(2)xC(2)", "--class-cap", "4"]).status.code(), Some(0));
    assert_eq!(run(&["report", "--group", "D(9)", "--class-cap", "3"]).status.code(), Some(3));
    assert_eq!(run(&["al-check", "--n", "4", "--d", "2"]).status.code(), Some(3));
    let err = String::from_utf8(run(&["report", "--group", "D(4"]).stderr).unwrap();
    assert!(err.contains("position"));
}

#[test]
fn verify_suites() {
    let out = run(&["verify", "two-degree", "--group", "D(7)"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["outcome"], "pass");
    assert_eq!(v["checks"][0]["actual"], "13/7");

    let out = run(&["verify", "key-trick", "--group", "Q8", "--trials", "100"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["outcome"], "pass");

    let dir = tempfile::tempdir().unwrap();
    let path = s3_table(dir.path());
    let out = run(&["verify", "minimal", "--group", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["checks"][0]["actual"], "5/3");

    let out = run(&["verify", "two-degree", "--group", "C(2)xD(4)xD(4)"]);
    assert_eq!(json(&out)["outcome"], "n/a");
    assert_eq!(out.status.code(), Some(0));

    for (theorem, group) in [
        ("johnson-vs-ad", "H(4)"),
        ("products", "Q8xD(4)"),
        ("plancherel", "Hr(2,2)"),
        ("muK", "Hr(3,1)"),
    ] {
        let out = run(&["verify", theorem, "--group", group, "--trials", "20"]);
        assert_eq!(out.status.code(), Some(0), "{theorem} {group}");
    }
    assert_eq!(run(&["verify", "products", "--group", "D(3)", "--with", "C(4)"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "products", "--group", "D(3)"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "al"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "plancherel", "--table", &path]).status.code(), Some(2));

    let csv = String::from_utf8(run(&["verify", "minimal", "--group", "Q8", "--format", "csv"]).stdout).unwrap();
    assert!(csv.starts_with("theorem,group,check,outcome,expected,actual\n"));
}

#[test]
fn scans() {
    let cyclic: Vec<String> = (1..=8).map(|n| format!("C({n})")).collect();
    let mut args = vec!["scan"];
    args.extend(cyclic.iter().map(String::as_str));
    let v = json(&run(&args));
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["am"] == "1"));

    let v = json(&run(&["scan", "Hr(2,1)", "Hr(3,1)", "Hr(5,1)", "Hr(7,1)"]));
    let am: Vec<&str> = v["rows"].as_array().unwrap().iter().map(|r| r["am"].as_str().unwrap()).collect();
    assert_eq!(am, ["3/2", "7/3", "21/5", "43/7"]);

    let v = json(&run(&["scan", "D(3)", "D(5)", "D(7)", "D(9)"]));
    let am: Vec<&str> = v["rows"].as_array().unwrap().iter().map(|r| r["am"].as_str().unwrap()).collect();
    assert_eq!(am, ["5/3", "9/5", "13/7", "17/9"]);

    let out = run(&["scan", "C(3)", "Hr(4,1)", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(1));
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.lines().next().unwrap().ends_with(",error"));
    assert!(csv.contains("4 is not prime"));
    assert!(csv.lines().last().unwrap().starts_with("# rows=2 reported=1 failed=1"));
}

#[test]
fn scan_corpus() {
    let out = run(&["scan", "--corpus", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.contains("\nS(4),24,8/3,8/3,8/3,3,17/6,"));
    assert!(csv.lines().last().unwrap().starts_with("# rows=53 reported=53 failed=0"));
}

#[test]
fn scan_directory_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    s3_table(dir.path());
    let q8 = serde_json::to_string(&CayleyFile::from_group(&amenability_core::families::quaternion())).unwrap();
    write_table(dir.path(), "Q8.json", &q8);
    let d = dir.path().display().to_string();
    let first = run(&["scan", "--dir", &d, "D(4)xC(3)", "--format", "csv"]);
    assert_eq!(first.status.code(), Some(0));
    for _ in 0..3 {
        assert_eq!(run(&["scan", "--dir", &d, "D(4)xC(3)", "--format", "csv"]).stdout, first.stdout);
    }
    let csv = String::from_utf8(first.stdout).unwrap();
    let names: Vec<&str> = csv.lines().skip(1).filter(|l| !l.starts_with('#')).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(names, ["D(4)xC(3)", "Q8.json", "S3-table.json"]);
}

#[test]
fn hr_sequence_and_al_check() {
    let out = run(&["hr-sequence", "--p", "3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["limit"], "7/3");
    assert_eq!(v["constant"], true);
    assert!(v["summary"].as_str().unwrap().contains("witnessed at finite scale"));
    assert_eq!(run(&["hr-sequence", "--p", "6", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["hr-sequence", "--p", "2", "--n", "6", "--max-order", "4096"]).status.code(), Some(3));

    let v = json(&run(&["al-check", "--n", "2", "--d", "2", "--trials", "50"]));
    assert_eq!(v["zero_trials"], 50);
    assert_eq!(v["passed"], true);
    let v = json(&run(&["al-check", "--n", "1", "--d", "2"]));
    assert!(v["witness"].is_object());
}
