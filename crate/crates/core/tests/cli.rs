//! End-to-end checks of the `pyramidion` command line: exit codes, output
//! formats, bundled defaults and determinism.

use std::process::{Command, Output};

fn pyramidion(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pyramidion"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn verify_bundled_registry_passes() {
    let out = pyramidion(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("21 claims: 21 passed, 0 failed, 0 errored"));
}

#[test]
fn verify_single_claim_filter() {
    let out = pyramidion(&["verify", "--claim", "C-MONTEL"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("C-MONTEL"));
    assert!(text.contains("1 claims: 1 passed"));
    assert!(!text.contains("C-LEGON-W"));
}

#[test]
fn verify_unknown_claim_is_an_input_error() {
    let out = pyramidion(&["verify", "--claim", "C-NOPE"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("C-NOPE"));
}

#[test]
fn verify_missing_dataset_is_an_input_error() {
    let out = pyramidion(&["verify", "--dataset", "/nonexistent/missing.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("missing.json"));
}

#[test]
fn verify_rejects_schema_violations_with_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"cubit_in_meters": 0.5235, "measurements": [
            {"monument": "x", "dimension": "d", "value": -1, "unit": "meter", "source": "S"}
        ]}"#,
    )
    .unwrap();
    let out = pyramidion(&["verify", "--dataset", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("strictly positive"));
}

#[test]
fn verify_csv_has_one_row_per_claim() {
    let out = pyramidion(&["verify", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("id,lhs,rhs,rel_err,claimed,pass"));
    assert_eq!(text.lines().count(), 22);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn verify_json_round_trips_with_claim_result_fields() {
    let out = pyramidion(&["verify", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let entries = value["entries"].as_array().expect("entries array");
    assert_eq!(entries.len(), 21);
    for entry in entries {
        // Value sorts keys; compare as a set
        let keys: Vec<&str> = entry.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            ["claimed_rel_err", "id", "lhs_value", "margin", "pass", "rel_err", "rhs_value"]
        );
    }
    assert_eq!(value["passed"], 21);
}

#[test]
fn verify_failing_claim_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("strict.json");
    std::fs::write(
        &path,
        r#"{"claims": [{"id": "TOO-STRICT", "description": "", "lhs": "kheops.base", "rhs": "441",
             "unit_system": "cubit", "claimed_rel_err": 1e-9}]}"#,
    )
    .unwrap();
    let out = pyramidion(&["verify", "--claims", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn verify_errored_claim_exits_two_but_reports_the_rest() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mixed.json");
    std::fs::write(
        &path,
        r#"{"claims": [
            {"id": "OK", "description": "", "lhs": "kheops.base", "rhs": "440",
             "unit_system": "cubit", "claimed_rel_err": 1e-6},
            {"id": "GHOST", "description": "", "lhs": "sphinx.height", "rhs": "1",
             "unit_system": "meter", "claimed_rel_err": 1e-3}
        ]}"#,
    )
    .unwrap();
    let out = pyramidion(&["verify", "--claims", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(text.contains("OK") && text.contains("ERROR") && text.contains("sphinx.height"));
}

#[test]
fn trisect_defaults_converge_on_a_right_angle() {
    let out = pyramidion(&["trisect", "--angle", "90"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("30.000000"));
    assert!(text.contains("converged: yes"));
}

#[test]
fn trisect_iteration_capped_run_reports_non_convergence() {
    let out = pyramidion(&["trisect", "--angle", "54:27:44", "--unit", "100", "--iters", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("converged: no"));
}

#[test]
fn trisect_out_of_range_angle_exits_two() {
    let out = pyramidion(&["trisect", "--angle", "200"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("0 < theta < 180"));
}

#[test]
fn trisect_json_exposes_exactly_the_trace_fields() {
    let out = pyramidion(&["trisect", "--angle", "90", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    // Value sorts keys; compare as sets
    let keys: Vec<&str> = value.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["converged", "final_third", "rows", "theta", "unit"]);
    assert_eq!(value["theta"], 90.0);
    let row_keys: Vec<&str> = value["rows"][0]
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(row_keys, ["cx", "height_t", "ix", "label", "proj_at", "third_deg"]);
}

#[test]
fn triples_output_matches_the_sequence() {
    let out = pyramidion(&["triples", "--count", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3,4,5\n20,21,29\n119,120,169\n696,697,985\n");
    let out = pyramidion(&["triples", "--count", "1"]);
    assert_eq!(stdout(&out), "3,4,5\n");
    let out = pyramidion(&["triples", "--count", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn run_accepts_bundled_names_and_real_paths() {
    let out = pyramidion(&["run", "cubature.geo"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("3 passed, 0 failed"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("own.geo");
    std::fs::write(&path, "num x = 2 + 2\nassert approx(x, 4, 1e-12)\n").unwrap();
    let out = pyramidion(&["run", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn run_renders_svg_when_asked() {
    let dir = tempfile::tempdir().unwrap();
    let svg_path = dir.path().join("construction.svg");
    let out = pyramidion(&["run", "trisection.geo", "--render", svg_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<?xml version=\"1.0\""));
    assert!(svg.contains("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\""));
    assert!(svg.trim_end().ends_with("</svg>"));
    for label in ["A", "C", "I", "S", "T1", "T2", "T3", "T4"] {
        assert!(svg.contains(&format!(">{label}</text>")), "label {label} missing");
    }
}

#[test]
fn run_failing_assertion_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fail.geo");
    std::fs::write(&path, "assert approx(1, 2, 1e-6)\n").unwrap();
    let out = pyramidion(&["run", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn run_diagnostics_carry_file_line_col() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.geo");
    std::fs::write(&path, "num ok = 1\npoint P = (\n").unwrap();
    let out = pyramidion(&["run", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(
        err.contains("bad.geo:2:12:"),
        "diagnostic should be path:line:col, got: {err}"
    );
}

#[test]
fn run_missing_script_exits_two() {
    let out = pyramidion(&["run", "/nonexistent/ghost.geo"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flags_are_rejected_with_usage() {
    let out = pyramidion(&["verify", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).to_lowercase().contains("usage"));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        vec!["verify"],
        vec!["verify", "--format", "json"],
        vec!["trisect", "--angle", "54:27:44", "--unit", "100", "--iters", "4"],
        vec!["triples", "--count", "6", "--format", "csv"],
        vec!["run", "montel.geo"],
    ] {
        let first = pyramidion(&args);
        let second = pyramidion(&args);
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
        assert_eq!(first.status.code(), second.status.code());
    }
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = pyramidion(&["verify", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 22);
}
