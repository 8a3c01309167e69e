use std::path::Path;
use std::process::{Command, Output};

fn mckay(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mckay"))
        .args(args)
        .env("MCKAY_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn fixture(name: &str) -> String {
    format!("{}/../core/tests/data/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn build_writes_table_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s5.json");
    let o = mckay(dir.path(), &["build", "sym", "5", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("order 120"));
    assert!(s.contains("classes 7"));
    assert!(s.contains("degrees 1^2, 4^2, 5^2, 6"));
    assert!(out.is_file());

    let o = mckay(dir.path(), &["build", "psl2", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order 168"));
    assert!(stdout(&o).contains("classes 6"));
    assert!(dir.path().join("psl2_7.json").is_file());
    assert!(dir.path().join("psl2_7.json.sha256").is_file());
}

#[test]
fn bad_parameters_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let o = mckay(dir.path(), &["build", "psl2", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("prime power"));
    assert_eq!(mckay(dir.path(), &["build", "cube", "3"]).status.code(), Some(2));
    assert_eq!(mckay(dir.path(), &["verify", "gluck"]).status.code(), Some(2));
    assert_eq!(mckay(dir.path(), &["graph", "sym_5", "nope"]).status.code(), Some(2));
    assert_eq!(
        mckay(dir.path(), &["verify", "gluck", "--table", "sym_5"]).status.code(),
        Some(2)
    );
}

#[test]
fn graph_diameter_and_exports() {
    let dir = tempfile::tempdir().unwrap();
    let o = mckay(dir.path(), &["graph", "sym_5", "chi(4,1)"]);
    assert_eq!(stdout(&o).trim(), "diameter 4");
    let o = mckay(dir.path(), &["graph", "sym_5", "chi(5)"]);
    assert_eq!(stdout(&o).trim(), "disconnected");

    let dot = dir.path().join("g.dot");
    let csv = dir.path().join("g.csv");
    let o = mckay(
        dir.path(),
        &["graph", "psl2_7", "St", "--dot", dot.to_str().unwrap(), "--csv", csv.to_str().unwrap()],
    );
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(dot).unwrap();
    let vertices = dot.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count();
    assert_eq!(vertices, 6);
    assert!(std::fs::read_to_string(csv).unwrap().lines().count() > 1);
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let o = mckay(dir.path(), &["verify", "alt", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "pass");

    for args in [
        vec!["verify", "stsq", "--table", "psl2_7"],
        vec!["verify", "qs", "--g", "sl2_5", "--s", "psl2_5"],
        vec!["verify", "bb", "--table", "sym_5", "--alpha", "chi(4,1)"],
        vec!["verify", "multfree", "--table", "sym_5", "--constituent", "chi(4,1)", "--constituent", "chi(3,2)"],
    ] {
        let o = mckay(dir.path(), &args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }

    // the stated transvection value does not match the table
    let psu = fixture("psu3_3");
    let o = mckay(dir.path(), &["verify", "transvection", "--table", &psu]);
    assert_eq!(o.status.code(), Some(1));
    // a report-only run exits 0
    let o = mckay(dir.path(), &["verify", "transvection", "--table", "psl2_7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"verdict\": \"report\""));
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = mckay(dir.path(), &["verify", "expansion", "--table", "psl2_5", "--l", "4", "--out", p.to_str().unwrap()]);
        assert_eq!(stdout(&o).trim(), "expansion pass");
    }
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn tampered_cache_entry_is_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(mckay(dir.path(), &["build", "alt", "5"]).status.code(), Some(0));
    let entry = dir.path().join("alt_5.json");
    let clean = std::fs::read_to_string(&entry).unwrap();
    std::fs::write(&entry, clean.replace("\"order\": 60", "\"order\": 61")).unwrap();

    let o = mckay(dir.path(), &["graph", "alt_5", "chi(3,1,1)+"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("rebuilt"));
    assert_eq!(std::fs::read_to_string(&entry).unwrap(), clean);

    // a second run hits the repaired entry silently
    let o = mckay(dir.path(), &["graph", "alt_5", "chi(3,1,1)+"]);
    assert!(o.stderr.is_empty());
    assert!(!dir.path().join(".lock").exists());
}
