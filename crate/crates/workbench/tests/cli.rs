//! End-to-end CLI checks: exit codes and the stable report schema.

use std::path::Path;
use std::process::{Command, Output};

use tempfile::tempdir;
use ydl_workbench::format::AlgebraFile;

fn ydl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ydl"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn passing_suite_exits_zero() {
    let out = ydl(&["check", "hopf", "--algebra", "c2"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[PASS] hopf/associativity"));
    assert!(text.contains("OK:"));
}

#[test]
fn failing_check_exits_one_with_witness() {
    // a corrupted algebra file: zero antipode on kC₂
    let dir = tempdir().unwrap();
    let h = ydl_workbench::catalog::algebra("c2").unwrap();
    let mut file = AlgebraFile::from_hopf(&h);
    file.antipode = vec![vec!["0".into(), "0".into()], vec!["0".into(), "0".into()]];
    let path = dir.path().join("broken_c2.json");
    std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();

    // validated load refuses it: input error, exit 2
    let out = ydl(&["check", "hopf", "--algebra", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "{out:?}");

    // unchecked load runs the battery and fails with a witness: exit 1
    let out = ydl(&[
        "check",
        "hopf",
        "--algebra",
        path.to_str().unwrap(),
        "--unchecked",
    ]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[FAIL] hopf/antipode"), "{text}");
    assert!(text.contains("witness 1"), "{text}");
}

#[test]
fn input_errors_exit_two() {
    let out = ydl(&["check", "hopf", "--algebra", "not_a_key"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ydl(&["check", "wrong_suite", "--algebra", "c2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ydl(&["check", "qt", "--algebra", "c2"]); // missing --r
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(ydl(&["check", "qt", "--algebra", "c2"]).stderr).unwrap();
    assert!(err.contains("requires"), "{err}");
}

#[test]
fn variant_flag_restricts_the_ydl_suite() {
    let out = ydl(&["check", "ydl", "--algebra", "sweedler", "--variant", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("ydl/variant3/yd_left"));
    assert!(!text.contains("ydl/variant1/"));
}

#[test]
fn qt_suite_runs_from_files_and_catalog_keys() {
    let out = ydl(&["check", "qt", "--algebra", "c2", "--r", "r0"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    // same R from a file
    let dir = tempdir().unwrap();
    let path = dir.path().join("r0.json");
    std::fs::write(&path, r#"{"r": [["1/2", "1/2"], ["1/2", "-1/2"]]}"#).unwrap();
    let out = ydl(&[
        "check",
        "qt",
        "--algebra",
        "c2",
        "--r",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
}

#[test]
fn machine_report_matches_golden_schema() {
    // full suite on kC₂ with the sign data pins the schema: field names,
    // check names, and ordering are part of the stable interface
    let out = ydl(&[
        "check",
        "all",
        "--algebra",
        "c2",
        "--r",
        "r0",
        "--zeta",
        "sign",
        "--report",
        "machine",
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let mut got: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("machine report is JSON");
    // wall time varies run to run; normalize before comparison
    got["wall_time_ms"] = serde_json::json!(0);

    let golden_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/c2_all.json");
    let golden_text = std::fs::read_to_string(&golden_path).expect("golden file present");
    let golden: serde_json::Value = serde_json::from_str(&golden_text).unwrap();
    assert_eq!(
        got, golden,
        "machine report schema drifted; regenerate tests/golden/c2_all.json deliberately"
    );
}

#[test]
fn machine_report_round_trips_through_the_schema_types() {
    let out = ydl(&[
        "check",
        "symmetry",
        "--algebra",
        "s3",
        "--report",
        "machine",
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let report: ydl_workbench::report::MachineReport =
        serde_json::from_slice(&out.stdout).expect("parses into the schema types");
    assert_eq!(report.schema_version, 1);
    assert_eq!(report.suite, "symmetry");
    assert!(report.overall);
    // the non-symmetric canonical pairs carry coefficient-vector witnesses
    let pair = report
        .checks
        .iter()
        .find(|c| c.name == "symmetry/pair_v1_v2")
        .unwrap();
    let w = pair.witness.as_ref().unwrap();
    assert_eq!(w.lhs.len(), 6usize.pow(4));
    assert!(w.lhs.iter().any(|s| s == "1"));
}
