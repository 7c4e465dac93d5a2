use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homspace"))
        .arg("--no-meta")
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let code = out.status.code().unwrap();
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, json)
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn eymard_single_generator() {
    let (code, r) = report(&["eymard-verify", "{x0}"]);
    assert_eq!(code, 0);
    assert_eq!(r["report"]["level"], 0);
    assert_eq!(r["passed"], true);
}

#[test]
fn eymard_conjugate_and_generator() {
    let (code, r) = report(&["eymard-verify", "{x5 x3 x5^-1, x1}"]);
    assert_eq!(code, 0);
    assert_eq!(r["report"]["level"], 3);
    for d in r["report"]["deviations"].as_array().unwrap() {
        assert_eq!(d["deviation"], 0.0);
    }
}

#[test]
fn eymard_usage_errors() {
    let out = run(&["eymard-verify", "{}"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["eymard-verify", "{x1, x2^}"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("byte 8"), "{}", stderr(&out));
}

#[test]
fn kesten_two_generators() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("profile.csv");
    let (code, r) = report(&["kesten", "--k", "2", "--radii", "1..10", "--csv", csv.to_str().unwrap()]);
    assert_eq!(code, 0);
    let est: Vec<f64> = r["report"]["profile"]["estimates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    assert_eq!(est.len(), 10);
    assert!(est.windows(2).all(|w| w[0] <= w[1]));
    assert!(*est.last().unwrap() <= 0.8661);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("radius,nodes,estimate\n1,5,"));
    assert_eq!(text.lines().count(), 11);
}

#[test]
fn kesten_path_approaches_one() {
    let (code, r) = report(&["kesten", "--k", "1", "--radii", "50,100,200"]);
    assert_eq!(code, 0);
    let last = r["report"]["profile"]["estimates"][2].as_f64().unwrap();
    assert!(last > 0.99);
}

#[test]
fn kesten_usage_and_resource_errors() {
    assert_eq!(run(&["kesten", "--k", "0"]).status.code(), Some(2));
    assert_eq!(run(&["kesten", "--k", "2", "--radii", "3,1"]).status.code(), Some(2));
    let out = run(&["kesten", "--k", "2", "--radii", "1..9", "--cap", "1000"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("radius"));
}

#[test]
fn reiter_translation() {
    let (code, r) = report(&["reiter", "{t}", "--epsilon", "0.2"]);
    assert_eq!(code, 0);
    assert_eq!(r["report"]["certificate"]["window"], 50);
    let dev = r["report"]["max_deviation"].as_f64().unwrap();
    assert!((dev - 0.2).abs() < 1e-12);
}

#[test]
fn reiter_free_generator() {
    let (code, r) = report(&["reiter", "x0", "--epsilon", "0.5"]);
    assert_eq!(code, 0);
    assert_eq!(r["report"]["certificate"]["window"], 1);
    assert_eq!(r["report"]["max_deviation"], 0.0);
}

#[test]
fn reiter_mixed_generators() {
    let (code, r) = report(&["reiter", "{t, (0; x0), (0; x-3)}", "--epsilon", "0.1"]);
    assert_eq!(code, 0);
    let n = r["report"]["certificate"]["window"].as_u64().unwrap();
    assert!((200..=400).contains(&n));
    assert!(r["report"]["recheck_drift"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn reiter_errors() {
    assert_eq!(run(&["reiter", "t", "--epsilon", "3"]).status.code(), Some(2));
    assert_eq!(run(&["reiter", "t", "--epsilon", "0"]).status.code(), Some(2));
    assert_eq!(run(&["reiter", "(1; x1", "--epsilon", "0.2"]).status.code(), Some(2));
    assert_eq!(run(&["reiter", "t", "--epsilon", "0.01", "--window", "64"]).status.code(), Some(3));
}

#[test]
fn reciprocity_bundled_suite_passes() {
    let (code, r) = report(&["reciprocity"]);
    assert_eq!(code, 0);
    assert_eq!(r["report"]["failures"], 0);
    assert!(r["report"]["checks_run"].as_u64().unwrap() > 20);
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn reciprocity_reports_corrupted_character() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "s3.chars", "1 1 1\n1 -1 1\n2 0 -1\n");
    let suite = write(
        dir.path(),
        "bad.suite",
        "group S3 perm 3 : (1 2) ; (1 2 3)\nirreps S3 s3.chars\nchar S3 bad = 1 0.5 0\ninvariant S3 bad\nfrobenius S3 S3\n",
    );
    let (code, r) = report(&["reciprocity", &suite]);
    assert_eq!(code, 1);
    let checks = r["report"]["checks"].as_array().unwrap();
    assert_eq!(checks[0]["passed"], false);
    assert!(checks[0]["detail"]["error"].as_str().unwrap().contains("integer"));
    assert_eq!(checks[1]["passed"], true);
}

#[test]
fn reciprocity_lists_malformed_lines() {
    let dir = tempfile::tempdir().unwrap();
    let suite = write(
        dir.path(),
        "broken.suite",
        "group S3 perm 3 : (1 2) ; (1 2 3)\nfrobenius S3 C3\n\nsubgroup X < S3 : (1 4)\n",
    );
    let out = run(&["reciprocity", &suite]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("line 2") && err.contains("line 4"), "{err}");
}

#[test]
fn reciprocity_empty_suite_warns() {
    let dir = tempfile::tempdir().unwrap();
    let suite = write(dir.path(), "empty.suite", "# nothing yet\n");
    let out = run(&["reciprocity", &suite]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning"));
}

#[test]
fn congruence_orders_and_witness() {
    for (n, m, order) in [("2", "2", 6), ("2", "3", 24), ("2", "5", 120), ("3", "2", 168)] {
        let (code, r) = report(&["congruence", "--n", n, "--m", m]);
        assert_eq!(code, 0);
        assert_eq!(r["report"]["order"], order);
        assert_eq!(r["report"]["formula_order"], order);
    }
    let (code, r) = report(&["congruence", "--n", "2", "--m", "3", "--witness", "1 6 / 0 1"]);
    assert_eq!(code, 0);
    assert_eq!(r["report"]["witness"]["modulus"], 4);
    assert_eq!(r["report"]["witness"]["trivial_mod_m"], true);
    assert_eq!(run(&["congruence", "--n", "2", "--m", "3", "--witness", "2 0 / 0 1"]).status.code(), Some(2));
    assert_eq!(run(&["congruence", "--n", "3", "--m", "5", "--cap", "1000"]).status.code(), Some(3));
}

#[test]
fn reports_are_deterministic_without_meta() {
    let a = run(&["reiter", "t, x0", "--epsilon", "0.3"]);
    let b = run(&["reiter", "t, x0", "--epsilon", "0.3"]);
    assert_eq!(a.stdout, b.stdout);
    let with_meta = Command::new(env!("CARGO_BIN_EXE_homspace"))
        .args(["eymard-verify", "x0"])
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&with_meta.stdout).unwrap();
    assert!(v["meta"]["timestamp"].as_u64().unwrap() > 0);
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = run(&["--out", path.to_str().unwrap(), "eymard-verify", "x0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["command"], "eymard-verify");
}
