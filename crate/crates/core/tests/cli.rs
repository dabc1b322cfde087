//! End-to-end tests of the binary: golden outputs, JSON/text agreement,
//! and exit codes (0 success, 1 verification failure, 2 usage/parse).

use std::process::{Command, Output};

fn fishburn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fishburn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = fishburn(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn lines_of(args: &[&str]) -> Vec<String> {
    stdout_of(args).lines().map(String::from).collect()
}

#[test]
fn enumerate_sequences_three() {
    assert_eq!(
        lines_of(&["enumerate", "sequences", "3"]),
        ["0 0 0", "0 0 1", "0 1 0", "0 1 1", "0 1 2"]
    );
}

#[test]
fn enumerate_matrices_one() {
    assert_eq!(lines_of(&["enumerate", "matrices", "1"]), ["1"]);
}

#[test]
fn enumerate_avoiders_four_has_fifteen_lines() {
    assert_eq!(lines_of(&["enumerate", "avoiders", "4"]).len(), 15);
}

#[test]
fn enumerate_budget_suggests_numbers() {
    let out = fishburn(&["enumerate", "avoiders", "11"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("numbers"), "stderr: {err}");
}

#[test]
fn map_golden_examples() {
    assert_eq!(
        stdout_of(&["map", "perm", "seq", "8 5 2 3 1 6 4 7"]).trim(),
        "0 1 1 0 2 1 0 3"
    );
    assert_eq!(stdout_of(&["map", "seq", "matrix", "0"]).trim(), "1");
    assert_eq!(
        stdout_of(&["map", "seq", "perm", "0 1 1 0 2 1 0 3"]).trim(),
        "8 5 2 3 1 6 4 7"
    );
    let image = stdout_of(&["map", "perm", "matrix", "8 5 2 3 1 6 4 7", "--via", "alpha"]);
    assert_eq!(image.trim().split(';').count(), 4);
    let back = stdout_of(&["map", "matrix", "perm", image.trim()]);
    assert_eq!(back.trim(), "8 5 2 3 1 6 4 7");
}

#[test]
fn map_chain_reproduces_the_published_insertion_steps() {
    let lines = lines_of(&["map", "perm", "seq", "8 5 2 3 1 6 4 7", "--chain"]);
    assert_eq!(lines[0], "_1 1 _0");
    assert_eq!(lines[1], "x_2 = 1: _2 2 _1 1 _0");
    assert_eq!(lines[4], "x_5 = 2: _3 5 _2 2 3 1 _1 4 _0");
    assert_eq!(lines[7], "x_8 = 3: _4 8 _3 5 2 3 1 _2 6 4 _1 7 _0");
    assert_eq!(lines[8], "0 1 1 0 2 1 0 3");
}

#[test]
fn stats_golden_lines() {
    let perm_stats = stdout_of(&["stats", "perm", "4 2 1 7 8 5 3 6"]);
    assert!(perm_stats.contains("LMAXL: 2 2 3"));
    assert!(perm_stats.contains("RMAXL: 0 2"));
    assert!(perm_stats.contains("delta: 2q^2 + q^3"));

    let seq_stats = stdout_of(&["stats", "seq", "0"]);
    assert!(seq_stats.contains("zero: 1"));
    assert!(seq_stats.contains("max: 1"));
    assert!(seq_stats.contains("rmin: 1"));

    let matrix_stats = stdout_of(&["stats", "matrix", "1 1; 0 1"]);
    assert!(matrix_stats.contains("ne: 1"));
    assert!(matrix_stats.contains("tr: 2"));
    assert!(matrix_stats.contains("rsum1: 2"));

    let modified = stdout_of(&["stats", "seq", "0 1 0 1 2 2 1 3"]);
    assert!(modified.contains("ASC: 1 3 4 7"));
    assert!(modified.contains("modified: 0 4 0 1 2 2 1 3"));
}

#[test]
fn json_and_text_enumerations_carry_the_same_objects() {
    let text: Vec<String> = lines_of(&["enumerate", "matrices", "3"]);
    let json = stdout_of(&["enumerate", "matrices", "3", "--format", "json"]);
    let parsed: Vec<Vec<Vec<u64>>> = serde_json::from_str(&json).unwrap();
    let rendered: Vec<String> = parsed
        .iter()
        .map(|rows| {
            rows.iter()
                .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join("; ")
        })
        .collect();
    assert_eq!(rendered, text);
}

#[test]
fn json_stats_match_text_fields() {
    let json = stdout_of(&["stats", "perm", "4 2 1 7 8 5 3 6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["lmaxl"], serde_json::json!([2, 2, 3]));
    assert_eq!(v["rmaxl"], serde_json::json!([0, 2]));
    assert_eq!(v["delta"], serde_json::json!({"2": 2, "3": 1}));
    assert_eq!(v["sites"], 5);
}

#[test]
fn table_reports_symmetry() {
    let out = stdout_of(&["table", "matrices", "rsum1", "ne", "3"]);
    assert!(out.contains("total: 5"));
    assert!(out.contains("symmetric: yes"));
    let json = stdout_of(&[
        "table",
        "sequences",
        "zero",
        "rmin",
        "4",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["total"], 15);
    assert_eq!(v["symmetric"], true);
}

#[test]
fn table_rejects_unknown_statistics() {
    let out = fishburn(&["table", "avoiders", "zero", "rlmax", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lrmax, lrmin, rlmax, rlmin"));
}

#[test]
fn numbers_prints_the_series() {
    let lines = lines_of(&["numbers", "8"]);
    assert_eq!(lines[0], "F_0 = 1");
    assert_eq!(lines[3], "F_3 = 5");
    assert_eq!(lines[8], "F_8 = 5335");
}

#[test]
fn verify_remark_only() {
    let out = fishburn(&["verify", "ci", "--only", "remark"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("inverse encoding: 0 1 2 2 3 1 3 1 (asc 4)"));
    assert!(text.contains("image dims: 4 vs 5"));
    assert!(text.contains("flip commutes: no"));
    assert!(text.contains("remark: PASS"));
}

#[test]
fn verify_ci_counts_only() {
    let out = fishburn(&["verify", "ci", "--only", "counts"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("counts: PASS"));
}

#[test]
fn verify_json_is_machine_readable() {
    let json = stdout_of(&["verify", "ci", "--only", "transport", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["n_max"], 7);
    assert_eq!(v["failure"], serde_json::Value::Null);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["enumerate", "avoiders"][..],
        &["enumerate", "posets", "3"][..],
        &["map", "perm", "seq", "1 x 3"][..],
        &["map", "perm", "seq", "4 2 5 1 3"][..],
        &["stats", "seq", "0 2"][..],
        &["verify", "nightly"][..],
    ] {
        let out = fishburn(args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
    }
}

#[test]
fn parse_diagnostics_name_the_problem() {
    let out = fishburn(&["stats", "seq", "0 1 3"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("position 3"), "stderr: {err}");
    let out = fishburn(&["stats", "matrix", "1 1; 1 1"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("below the diagonal"), "stderr: {err}");
}
