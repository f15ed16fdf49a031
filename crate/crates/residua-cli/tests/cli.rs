//! End-to-end behavior of the binary: JSON content of each command,
//! grammar round-trips, exit codes, and the SVG elements.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_residua"));
    cmd.args(args);
    match stdin {
        Some(text) => {
            cmd.stdin(Stdio::piped())
                .stdout(Stdio::piped())
                .stderr(Stdio::piped());
            let mut child = cmd.spawn().expect("spawn");
            child
                .stdin
                .take()
                .expect("stdin")
                .write_all(text.as_bytes())
                .expect("write stdin");
            child.wait_with_output().expect("wait")
        }
        None => cmd.output().expect("run"),
    }
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const SAMPLE: &str = r#"{"n": 2, "generators": ["z^8", "z^6*w^2", "z^2*w^3", "z*w^5", "w^6"]}"#;

#[test]
fn rees_reports_both_valuations() {
    let out = run(&["rees"], Some(SAMPLE));
    assert_eq!(
        stdout_json(&out),
        json!([{"rho": [1, 2], "c": 8}, {"rho": [3, 2], "c": 12}])
    );
}

#[test]
fn ci_detects_pure_power_pairs() {
    let out = run(&["ci"], Some(r#"{"n":2,"generators":["z^3","w^2"]}"#));
    assert_eq!(stdout_json(&out), json!({"complete_intersection": true}));
    let out = run(&["ci"], Some(SAMPLE));
    assert_eq!(stdout_json(&out), json!({"complete_intersection": false}));
}

#[test]
fn essential_on_squared_maximal_ideal() {
    let out = run(
        &["essential"],
        Some(r#"{"n":2,"generators":["z^2","z*w","w^2"]}"#),
    );
    assert_eq!(
        stdout_json(&out),
        json!([
            {"indices": [1, 2], "rho": [1, 1], "c": 2, "determinant": 2},
            {"indices": [1, 3], "rho": [1, 1], "c": 2, "determinant": 4},
            {"indices": [2, 3], "rho": [1, 1], "c": 2, "determinant": 2}
        ])
    );
}

#[test]
fn socle_and_decompose_agree_on_counts() {
    let input = r#"{"n":2,"generators":["z^3","z*w","w^2"]}"#;
    let socle = stdout_json(&run(&["socle"], Some(input)));
    let decomposed = stdout_json(&run(&["decompose"], Some(input)));
    assert_eq!(socle["monomials"], json!(["w", "z^2"]));
    assert_eq!(socle["colength"], json!(4));
    assert_eq!(
        decomposed["components"],
        json!([["w", "z^3"], ["w^2", "z"]])
    );
}

/// parse(print(ideal)) is the identity for both generator syntaxes: the
/// printed form of the minimalized ideal feeds back to the same output.
#[test]
fn printed_ideals_parse_back() {
    let arrays = r#"{"n":2,"generators":[[8,0],[6,2],[2,3],[1,5],[0,6]]}"#;
    let from_arrays = run(&["power", "-k", "1"], Some(arrays));
    let from_strings = run(&["power", "-k", "1"], Some(SAMPLE));
    assert_eq!(from_arrays.stdout, from_strings.stdout);

    let printed: Value = stdout_json(&from_strings);
    let reinput = serde_json::to_string(&printed).unwrap();
    let again = run(&["power", "-k", "1"], Some(&reinput));
    assert_eq!(again.stdout, from_strings.stdout);
}

#[test]
fn closure_of_cubes_lists_segment_points() {
    let out = run(&["closure"], Some(r#"{"n":2,"generators":["z^3","w^3"]}"#));
    let parsed = stdout_json(&out);
    assert_eq!(
        parsed["generators"],
        json!(["w^3", "z*w^2", "z^2*w", "z^3"])
    );
}

#[test]
fn exit_codes_separate_input_and_verification_failures() {
    let bad = run(&["rees"], Some("this is not json"));
    assert_eq!(bad.status.code(), Some(2));

    let missing = run(&["rees", "/nonexistent/ideal.json"], None);
    assert_eq!(missing.status.code(), Some(2));

    let unbounded = run(&["socle"], Some(r#"{"n":2,"generators":["z^2","z*w"]}"#));
    assert_eq!(unbounded.status.code(), Some(2));
    let message = String::from_utf8_lossy(&unbounded.stderr);
    assert!(message.contains("'w'"), "diagnostic was: {message}");

    let flat = run(
        &["staircase"],
        Some(r#"{"n":3,"generators":["z_1","z_2","z_3"]}"#),
    );
    assert_eq!(flat.status.code(), Some(2));

    let fine = run(&["bs-check"], Some(SAMPLE));
    assert_eq!(fine.status.code(), Some(0));
}

#[test]
fn custom_variable_names_flow_through() {
    let out = run(
        &["socle"],
        Some(r#"{"n":3,"variables":["x","y","t"],"generators":["x^2","y^2","t^2"]}"#),
    );
    let parsed = stdout_json(&out);
    assert_eq!(parsed["monomials"], json!(["x*y*t"]));
}

#[test]
fn staircase_svg_marks_facets_and_closure_points() {
    let out = run(&["staircase"], Some(SAMPLE));
    assert!(out.status.success());
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.contains(">(1,2)</text>"));
    assert!(svg.contains(">(3,2)</text>"));
    assert_eq!(svg.matches("class=\"essential\"").count(), 3);

    let cube = run(
        &["staircase"],
        Some(r#"{"n":2,"generators":["z^3","w^3"]}"#),
    );
    let svg = String::from_utf8(cube.stdout).unwrap();
    assert_eq!(svg.matches("class=\"closure\"").count(), 2);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("plot.svg");
    let written = run(
        &["staircase", "--svg", path.to_str().unwrap()],
        Some(SAMPLE),
    );
    assert!(written.status.success());
    assert!(written.stdout.is_empty());
    let on_disk = std::fs::read_to_string(&path).unwrap();
    assert!(on_disk.contains(">(1,2)</text>"));
}

#[test]
fn verify_runs_clean_from_a_seed() {
    let out = run(&["verify", "--seed", "1", "--count", "4"], None);
    let parsed = stdout_json(&out);
    assert_eq!(parsed["ok"], json!(true));
    assert_eq!(parsed["seed"], json!(1));
    let checks = parsed["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 5);
    assert!(checks.iter().all(|c| c["failures"] == json!(0)));
}
