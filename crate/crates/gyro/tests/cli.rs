use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn gyro(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gyro")).args(args).output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn error(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const Z4: &str = r#"{"order": 4, "elements": ["e", "a", "b", "c"],
  "oplus": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]}"#;

#[test]
fn z4_file_validates_with_trivial_gyrations() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "z4.json", Z4);
    let out = gyro(&["table-validate", "--model", &format!("table:{path}")]);
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["results"]["order"], 4);
    assert_eq!(v["results"]["identity"], "e");
    assert_eq!(v["results"]["gyrations_all_identity"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["coverage"] == "exhaustive"));
}

#[test]
fn malformed_tables_exit_with_parse_errors() {
    let dir = tempfile::tempdir().unwrap();
    let ragged = write(dir.path(), "ragged.json", r#"{"order":2,"elements":["e","a"],"oplus":[[0,1],[1]]}"#);
    let range = write(dir.path(), "range.json", r#"{"order":2,"elements":["e","a"],"oplus":[[0,1],[1,2]]}"#);
    for (path, needle) in [(ragged, "ragged"), (range, "out of range")] {
        let out = gyro(&["table-validate", "--model", &format!("table:{path}")]);
        assert_eq!(out.status.code(), Some(3));
        let e = error(&out);
        assert_eq!(e["error"]["kind"], "parse");
        assert!(e["error"]["message"].as_str().unwrap().contains(needle), "{e}");
    }
    let out = gyro(&["table-validate", "--model", "table:/nonexistent/z.json"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(error(&out)["error"]["kind"], "io");
}

#[test]
fn a_table_that_is_not_a_gyrogroup_fails() {
    let dir = tempfile::tempdir().unwrap();
    // row 1 repeats a value: left translation by a is not injective
    let path = write(dir.path(), "bad.json", r#"{"order":3,"elements":["e","a","b"],"oplus":[[0,1,2],[1,1,0],[2,0,1]]}"#);
    let out = gyro(&["table-validate", "--model", &format!("table:{path}")]);
    assert_eq!(out.status.code(), Some(1));
    let v = report(&out);
    assert_eq!(v["pass"], false);
    let failed: Vec<&Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["pass"] == false).collect();
    assert!(failed.iter().any(|c| !c["witness"].is_null()));
}

#[test]
fn metric_example_passes_on_the_quartering_chain() {
    let out = gyro(&["metric", "--model", "mobius", "--chain", r#"{"kind": "radial_rapidity", "t0": 1.0, "ratio": 0.25, "depth": 24}"#, "--samples", "500"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = report(&out);
    assert_eq!(v["depth"], 24);
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["name"] == "oracle_agreement"));
}

#[test]
fn halving_chain_is_not_admissible() {
    let out = gyro(&["admissible", "--chain", r#"{"kind": "radial_rapidity", "t0": 1.0, "ratio": 0.5, "depth": 24}"#, "--samples", "200"]);
    assert_eq!(out.status.code(), Some(1));
    let v = report(&out);
    let level0 = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "triple_level_0").unwrap();
    assert_eq!(level0["pass"], false);
    assert_eq!(level0["witness"]["values"].as_array().unwrap().len(), 4);
}

#[test]
fn every_listed_suite_runs_on_a_builtin_model() {
    let out = gyro(&["--list-suites"]);
    assert_eq!(out.status.code(), Some(0));
    let listing = String::from_utf8(out.stdout).unwrap();
    let names: Vec<&str> = listing.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(names.len(), 10);
    for name in names {
        let mut args = vec![name, "--samples", "200"];
        match name {
            "table-validate" | "subgyrogroups" | "cosets" => args.extend(["--model", "klein"]),
            "search" => args.extend(["--order", "4"]),
            _ => {}
        }
        let out = gyro(&args);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(report(&out)["suite"], name);
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [vec!["bogus"], vec!["axioms", "--model", "poincare"], vec!["cosets"], vec!["axioms", "--samples", "x"]] {
        let out = gyro(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(error(&out)["error"]["exit_code"], 2);
    }
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = gyro(&["subgyrogroups", "--model", "cyclic:6", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(file["results"]["count"], 4);
    assert_eq!(file["suite"], "subgyrogroups");
}
