use std::path::Path;
use std::process::{Command, Output};

fn run_in(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(args)
        .arg("--cache")
        .arg(cache)
        .env_remove("SPECHT_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn golden(args: &[&str], expected: &str) {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(dir.path(), args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), expected, "{args:?}");
}

#[test]
fn golden_outputs() {
    golden(&["kl", "--n", "2", "--x", "e", "--y", "s1"], r#"{"h":"v"}"#);
    golden(&["specht", "--mu", "3", "--gen", "1"], r#"[["0"]]"#);
    golden(&["gram", "--mu", "1,1", "--at-one"], "[[2]]");
    golden(&["gram", "--mu", "2,1"], r#"[["1 + v^2","v"],["v","1 + v^2"]]"#);
    golden(&["gram", "--mu", "1,1", "--inverse", "--order", "10"], r#"[["1 - v^2 + v^4 - v^6 + v^8 - v^10"]]"#);
    golden(&["specht", "--mu", "1,1,1", "--gen", "2"], r#"[["v^-1 + v"]]"#);
    golden(&["specht", "--mu", "2,1", "--basis", "simple", "--gen", "1"], r#"[["0","1"],["0","v^-1 + v"]]"#);
    golden(&["kl", "--n", "4", "--x", "s2", "--y", "s2 s1 s3 s2"], r#"{"h":"v + v^3"}"#);
    golden(&["kl", "--n", "4", "--x", "e", "--y", "s2s1s3s2"], r#"{"h":"v^2 + v^4"}"#);
    golden(&["mu", "--n", "4", "--x", "s2", "--y", "s2 s1 s3 s2"], r#"{"mu":1}"#);
    golden(&["pkl", "--mu", "2,1", "--x", "e", "--y", "1,3,2"], r#"{"n":"v"}"#);
    golden(&["cells", "--n", "3"], r#"{"cells":[[[1,2,3]],[[1,3,2],[3,1,2]],[[2,1,3],[2,3,1]],[[3,2,1]]],"n":3}"#);
    golden(&["character", "--mu", "2,1", "--cycle-type", "3"], r#"{"character":-1}"#);
    golden(&["regular", "--n", "2", "--gen", "1", "--basis", "kl"], r#"[["0","0"],["1","v^-1 + v"]]"#);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| run_in(dir.path(), args).status.code();
    assert_eq!(code(&["specht-verify", "--n", "4"]), Some(0));
    assert_eq!(code(&["--help"]), Some(0));
    assert_eq!(code(&["frobnicate"]), Some(1));
    assert_eq!(code(&["kl", "--n", "3"]), Some(1));
    assert_eq!(code(&["kl", "--n", "9", "--x", "e", "--y", "e"]), Some(1));
    assert_eq!(code(&["kl", "--n", "3", "--x", "1,1,2", "--y", "e"]), Some(1));
    assert_eq!(code(&["specht", "--mu", "2,1", "--gen", "3"]), Some(1));
    assert_eq!(code(&["pkl", "--mu", "2,1", "--x", "2,1,3", "--y", "e"]), Some(1));
    assert_eq!(code(&["gram", "--mu", "0,2"]), Some(1));
}

#[test]
fn specht_verify_reports_every_composition() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(dir.path(), &["specht-verify", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["compositions"].as_array().unwrap().len(), 16);
}

#[test]
fn cold_and_cached_runs_agree() {
    let dir = tempfile::tempdir().unwrap();
    let cold = run_in(dir.path(), &["cells", "--n", "6"]);
    assert!(dir.path().join("tables-n6.json").exists());
    let warm = run_in(dir.path(), &["cells", "--n", "6"]);
    assert_eq!(cold.status.code(), Some(0));
    assert_eq!(cold.stdout, warm.stdout);
    let uncached =
        Command::new(env!("CARGO_BIN_EXE_specht")).args(["cells", "--n", "6", "--no-cache"]).output().unwrap();
    assert_eq!(cold.stdout, uncached.stdout);
}

#[test]
fn corrupted_cache_is_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tables-n4.json");
    std::fs::write(&path, r#"{"schema_version": 0}"#).unwrap();
    let o = run_in(dir.path(), &["gram", "--mu", "2,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("schema mismatch"));
    let fresh = tempfile::tempdir().unwrap();
    assert_eq!(o.stdout, run_in(fresh.path(), &["gram", "--mu", "2,2"]).stdout);
    // the rewritten file loads silently
    let again = run_in(dir.path(), &["gram", "--mu", "2,2"]);
    assert!(again.stderr.is_empty());
}

#[test]
fn environment_variable_selects_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(["kl", "--n", "3", "--x", "e", "--y", "3,2,1"])
        .env("SPECHT_CACHE", dir.path())
        .output()
        .unwrap();
    assert_eq!(stdout(&o), r#"{"h":"v^3"}"#);
    assert!(dir.path().join("tables-n3.json").exists());
}

#[test]
fn bench_reports_phases() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_in(dir.path(), &["bench", "--n", "3", "--repeat", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let runs = v["runs"].as_array().unwrap();
    assert_eq!(runs.len(), 2);
    for r in runs {
        for key in ["kl_table_ms", "cells_ms", "verification_ms", "total_ms"] {
            assert!(r[key].as_f64().unwrap() >= 0.0);
        }
    }
    assert!(v["sanity"]["max_over_min"].as_f64().unwrap() >= 1.0);
    assert_eq!(v["sanity"]["verification_pass"], true);
    assert_eq!(run_in(dir.path(), &["bench", "--n", "8"]).status.code(), Some(1));
}
