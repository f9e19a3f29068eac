//! End-to-end tests against the compiled binary: exit codes, JSON shapes,
//! file round trips, and byte-determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binact"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&output.stdout)
        )
    })
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn h2_counts_and_bounds() {
    let out = run(&["h2", "--size", "1"]);
    assert_eq!((code(&out), out.stdout.as_slice()), (0, b"1\n".as_slice()));
    let out = run(&["h2", "--size", "2", "--count"]);
    assert_eq!((code(&out), out.stdout.as_slice()), (0, b"4\n".as_slice()));
    let out = run(&["h2", "--size", "3", "--count"]);
    assert_eq!((code(&out), out.stdout.as_slice()), (0, b"216\n".as_slice()));

    // The bound gate is exit 2, the override opens size 4.
    let out = run(&["h2", "--size", "4", "--count"]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty(), "bound errors keep stdout empty");
    let out = run(&["h2", "--size", "4", "--count", "--max-n", "4"]);
    assert_eq!((code(&out), out.stdout.as_slice()), (0, b"331776\n".as_slice()));
    let out = run(&["h2", "--size", "2", "--max-n", "9"]);
    assert_eq!(code(&out), 3, "--max-n beyond 4 is an input error");
}

#[test]
fn h2_list_is_lexicographic_json() {
    let out = run(&["h2", "--size", "2", "--list"]);
    assert_eq!(code(&out), 0);
    let tables = stdout_json(&out);
    let tables = tables.as_array().expect("top-level array");
    assert_eq!(tables.len(), 4);
    assert_eq!(tables[0], serde_json::json!([[0, 1], [0, 1]]));
    assert_eq!(tables[3], serde_json::json!([[1, 0], [1, 0]]));
}

#[test]
fn argument_errors_exit_3() {
    assert_eq!(code(&run(&["h2", "--size", "2", "--count", "--list"])), 3);
    assert_eq!(code(&run(&["nope"])), 3);
    assert_eq!(code(&run(&["classify"])), 3);
    assert_eq!(code(&run(&["make", "coset", "--group", "Z4"])), 3);
    assert_eq!(code(&run(&["verify", "/no/such/file.json"])), 3);
}

#[test]
fn help_exits_0() {
    let out = run(&["--help"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("classify"));
}

#[test]
fn make_verify_classify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z6mod.json");
    let path_str = path.to_str().unwrap();

    let out = run(&["make", "coset", "--group", "Z6", "--subgroup", "0,3", "--out", path_str]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty(), "--out suppresses stdout");

    let out = run(&["verify", path_str]);
    assert_eq!(code(&out), 0);
    let report = stdout_json(&out);
    assert_eq!(report["status"], "pass");
    assert_eq!(report["axioms"]["pass"], true);
    assert_eq!(report["distributive"]["pass"], true);
    assert_eq!(report["transitive"]["pass"], true);
    assert_eq!(report["kernel"], serde_json::json!([0, 3]));
    assert_eq!(report["effective"], false);
    assert_eq!(report["relabeled"], false);

    let out = run(&["classify", path_str]);
    assert_eq!(code(&out), 0);
    let result = stdout_json(&out);
    assert_eq!(result["subgroup"], serde_json::json!([0, 3]));
    assert_eq!(result["coset_count"], 3);
    assert_eq!(result["checks"]["iso_bijective"], true);
    assert_eq!(result["checks"]["iso_biequivariant"], true);
    assert_eq!(result["checks"]["subgroup_normal"], true);
    // The recovered model is the same file the command started from.
    let original: Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(result["model"], original);

    // A different basepoint recovers the same subgroup.
    let out = run(&["classify", path_str, "--basepoint", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["subgroup"], serde_json::json!([0, 3]));

    let out = run(&["classify", path_str, "--basepoint", "99"]);
    assert_eq!(code(&out), 3, "basepoint out of range is an input error");
}

#[test]
fn non_normal_coset_fails_with_witness() {
    let out = run(&["make", "coset", "--group", "S3", "--subgroup", "0,1"]);
    assert_eq!(code(&out), 1);
    let error = stdout_json(&out);
    assert_eq!(error["error"]["kind"], "not-well-defined");
    let witness = &error["error"]["witness"];
    for key in ["g", "k", "m", "l", "n"] {
        assert!(witness[key].is_u64(), "witness lacks {key}: {witness}");
    }
}

#[test]
fn verify_reports_non_distributive_informational() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3inv.json");
    let path_str = path.to_str().unwrap();
    assert_eq!(code(&run(&["make", "inv-conj", "--group", "S3", "--out", path_str])), 0);

    let out = run(&["verify", path_str]);
    assert_eq!(code(&out), 0, "non-distributivity is informational, not an axiom failure");
    let report = stdout_json(&out);
    assert_eq!(report["status"], "pass");
    assert_eq!(report["distributive"]["pass"], false);
    let w = &report["distributive"]["witness"];
    assert!(w["g"].is_u64() && w["lhs"] != w["rhs"], "bad witness: {w}");
    assert_eq!(report["transitive"]["pass"], true);
    assert_eq!(report["effective"], true);

    // classify on the same file is a mathematical failure.
    let out = run(&["classify", path_str]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout_json(&out)["error"]["kind"], "not-distributive");
}

#[test]
fn verify_rejects_broken_tables() {
    let dir = tempfile::tempdir().unwrap();

    // Valid JSON, invalid axioms: the non-identity layer of Z2 is constant,
    // so the composition axiom breaks (1·1 = 0 must act as the unit).
    let path = dir.path().join("broken.json");
    std::fs::write(
        &path,
        r#"{"group": {"order": 2, "cayley": [[0,1],[1,0]]},
            "space_size": 2,
            "table": [[[0,1],[0,1]], [[0,0],[0,0]]]}"#,
    )
    .unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1, "axiom failures are mathematical failures");
    let report = stdout_json(&out);
    assert_eq!(report["status"], "fail");
    assert_eq!(report["axioms"]["pass"], false);
    assert_eq!(report["axioms"]["witness"]["kind"], "composition-axiom");

    // Shape violations and malformed JSON are parse errors.
    let path = dir.path().join("shape.json");
    std::fs::write(
        &path,
        r#"{"group": {"order": 2, "cayley": [[0,1],[1,0]]},
            "space_size": 2,
            "table": [[[0,1],[0,1]]]}"#,
    )
    .unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    assert!(out.stdout.is_empty());

    let path = dir.path().join("garbage.json");
    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(code(&run(&["verify", path.to_str().unwrap()])), 3);
}

#[test]
fn classify_rejects_non_transitive_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    // Both layers of Z2 act as the unit: a valid action, distributive,
    // but with singleton orbits.
    let path = dir.path().join("trivial.json");
    std::fs::write(
        &path,
        r#"{"group": {"order": 2, "cayley": [[0,1],[1,0]]},
            "space_size": 2,
            "table": [[[0,1],[0,1]], [[0,1],[0,1]]]}"#,
    )
    .unwrap();
    let out = run(&["classify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let error = stdout_json(&out);
    assert_eq!(error["error"]["kind"], "not-transitive");
    assert_eq!(error["error"]["witness"]["orbit"], serde_json::json!([0]));
}

#[test]
fn group_files_are_relabeled_to_identity_first() {
    let dir = tempfile::tempdir().unwrap();
    // A Z3 table with its identity at position 1: (a,b) ↦ a+b+2 mod 3.
    let path = dir.path().join("weird_z3.json");
    std::fs::write(&path, r#"{"order": 3, "cayley": [[2,0,1],[0,1,2],[1,2,0]]}"#).unwrap();

    let out = run(&["make", "conj", "--group", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let file = stdout_json(&out);
    assert_eq!(
        file["group"]["cayley"],
        serde_json::json!([[0, 1, 2], [1, 2, 0], [2, 0, 1]]),
        "emitted groups use the canonical identity-first numbering"
    );
}

#[test]
fn check_passes_and_is_deterministic() {
    let out = run(&["check"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_json(&out);
    assert_eq!(report["status"], "pass");
    assert_eq!(report["failed"], 0);
    assert_eq!(report["checks"].as_array().unwrap().len(), 20);
    // Timings go to stderr; stdout must not change across runs.
    let again = run(&["check"]);
    assert_eq!(out.stdout, again.stdout);

    // An absurdly small closure cap is a resource-bound failure inside the
    // battery: the report must surface it as a failing entry, not a pass.
    let out = run(&["check", "--closure-cap", "1"]);
    assert_eq!(code(&out), 1);
    let report = stdout_json(&out);
    assert_eq!(report["status"], "fail");
    let failing: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["generated-subgroup-distributive"]);
}

#[test]
fn deterministic_outputs_across_commands() {
    for args in [
        &["h2", "--size", "3", "--list"][..],
        &["make", "coset", "--group", "D4", "--subgroup", "0,2"][..],
        &["make", "inv-conj", "--group", "Q8"][..],
    ] {
        let first = run(args);
        let second = run(args);
        assert_eq!(code(&first), 0);
        assert_eq!(first.stdout, second.stdout, "{args:?} output drifted");
    }
}

#[test]
fn subgroup_membership_errors_are_input_errors() {
    // Not closed.
    assert_eq!(code(&run(&["make", "coset", "--group", "S3", "--subgroup", "0,1,2"])), 3);
    // Out of range.
    assert_eq!(code(&run(&["make", "coset", "--group", "Z4", "--subgroup", "0,9"])), 3);
    // Unknown group name that is not a path.
    assert_eq!(code(&run(&["make", "conj", "--group", "E8"])), 3);
    // A path that exists but holds a non-group.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nongroup.json");
    std::fs::write(&path, r#"{"order": 2, "cayley": [[0,0],[0,0]]}"#).unwrap();
    assert_eq!(code(&run(&["make", "conj", "--group", path.to_str().unwrap()])), 3);
}
