use std::path::Path;
use std::process::{Command, Output};

fn qalcove(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qalcove"))
        .args(args)
        .env_remove("QALCOVE_OUT_DIR")
        .output()
        .expect("running qalcove")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_chain(dir: &Path, name: &str, ty: &str, lambda: &str) -> String {
    let o = qalcove(&["chain", "lex", "--type", ty, "--lambda", lambda]);
    assert!(o.status.success());
    let p = dir.join(name);
    std::fs::write(&p, &o.stdout).unwrap();
    format!("@{}", p.display())
}

#[test]
fn a2_example_enumeration() {
    let tmp = tempfile::tempdir().unwrap();
    let g1 = write_chain(tmp.path(), "g1.json", "A2", "-2,1");
    let o = qalcove(&[
        "--format",
        "tsv",
        "adm",
        "enumerate",
        "--type",
        "A2",
        "--w",
        "s2",
        "--chain",
        &g1,
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().any(|r| r.starts_with("{1,2,3,4}\t")));
}

#[test]
fn g2_golden_check_succeeds() {
    let o = qalcove(&["ops", "golden", "--type", "G2"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn zero_weight_has_empty_chain() {
    let o = qalcove(&["chain", "lex", "--type", "A2", "--lambda", "0,0"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["roots"], serde_json::json!([]));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qalcove(&["bogus"]).status.code(), Some(2));
    let o = qalcove(&["chain", "lex", "--type", "Z9", "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(v["kind"], "usage");
}

#[test]
fn failed_checks_exit_1() {
    let tmp = tempfile::tempdir().unwrap();
    let x = write_chain(tmp.path(), "x.json", "A2", "1,0");
    let y = write_chain(tmp.path(), "y.json", "A2", "0,1");
    let o = qalcove(&["gf", "compare", "--chain", &x, "--chain2", &y]);
    assert_eq!(o.status.code(), Some(1));

    let a = tmp.path().join("a.json");
    let mut v: serde_json::Value = serde_json::from_slice(
        &qalcove(&["chain", "lex", "--type", "A2", "--lambda", "2,1"]).stdout,
    )
    .unwrap();
    v["roots"].as_array_mut().unwrap().reverse();
    std::fs::write(&a, v.to_string()).unwrap();
    let o = qalcove(&["chain", "validate", "--chain", &format!("@{}", a.display())]);
    assert_eq!(o.status.code(), Some(1));
    let err: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["kind"], "verification");
}

#[test]
fn suite_reports_are_reproducible() {
    let a = qalcove(&["suite", "all", "--only", "2,3"]);
    let b = qalcove(&["suite", "all", "--only", "2,3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        stdout(&a)
            .lines()
            .filter(|l| l.contains("\tPASS\t"))
            .count(),
        2
    );
}

#[test]
fn out_dir_receives_reports() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("reports");
    let o = qalcove(&[
        "--out-dir",
        dir.to_str().unwrap(),
        "chain",
        "lex",
        "--type",
        "C2",
        "--lambda",
        "1,1",
    ]);
    assert!(o.status.success());
    let written = std::fs::read(dir.join("chain.json")).unwrap();
    assert_eq!(written, o.stdout);
}
