//! End-to-end tests of the binary: golden outputs, exit codes, strictness,
//! and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(name),
    )
    .unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lyubgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn analyze_a6_matches_golden_json() {
    let path = fixture("a6.json");
    assert_eq!(
        stdout_of(&["analyze", path.to_str().unwrap()]),
        golden("a6_analyze.json")
    );
}

#[test]
fn analyze_a6_matches_golden_markdown() {
    let path = fixture("a6.json");
    assert_eq!(
        stdout_of(&["analyze", path.to_str().unwrap(), "--md"]),
        golden("a6_analyze.md")
    );
}

#[test]
fn analyze_a9q_matches_golden_json() {
    let path = fixture("a9q.json");
    assert_eq!(
        stdout_of(&["analyze", path.to_str().unwrap()]),
        golden("a9q_analyze.json")
    );
}

#[test]
fn gamma_dot_matches_golden() {
    let path = fixture("a6.json");
    assert_eq!(
        stdout_of(&["gamma", path.to_str().unwrap(), "--t", "2", "--dot"]),
        golden("a6_gamma2.dot")
    );
}

#[test]
fn abstract_input_gives_the_same_invariants() {
    let coord: serde_json::Value = serde_json::from_str(&stdout_of(&[
        "analyze",
        fixture("a6.json").to_str().unwrap(),
    ]))
    .unwrap();
    let abs: serde_json::Value = serde_json::from_str(&stdout_of(&[
        "analyze",
        fixture("abstract_a6.json").to_str().unwrap(),
    ]))
    .unwrap();
    assert_eq!(coord, abs);
}

#[test]
fn analyze_single_prime() {
    let text = stdout_of(&["analyze", fixture("single_prime.json").to_str().unwrap()]);
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["d"], 5);
    assert_eq!(report["c_graph"], 5);
    assert_eq!(report["lambda_top"], 1);
    assert_eq!(report["lambda01"], 0);
    assert_eq!(
        report["superdiag_lower_bounds"],
        serde_json::json!([0, 0, 0])
    );
}

#[test]
fn analyze_low_dimension_reports_the_oracle_only() {
    let text = stdout_of(&["analyze", fixture("two_lines.json").to_str().unwrap()]);
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["d"], 1);
    assert_eq!(report["c_oracle"], 0);
    assert!(report["note"].as_str().unwrap().contains("dim >= 2"));
    assert!(report.get("gamma_profile").is_none());
}

#[test]
fn gamma_json_lists_components() {
    let text = stdout_of(&["gamma", fixture("a6.json").to_str().unwrap(), "--t", "1"]);
    let graph: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(graph["component_count"], 3);
    assert_eq!(graph["edges"], serde_json::json!([]));
    assert_eq!(graph["components"], serde_json::json!([[1], [2], [3]]));
}

#[test]
fn gamma_on_projective_input_uses_intersection_dimensions() {
    let path = fixture("proj_two_surfaces.json");
    let text = stdout_of(&["gamma", path.to_str().unwrap(), "--t", "2"]);
    let graph: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(graph["component_count"], 1);
    assert_eq!(graph["vertices"], serde_json::json!(["Z1", "Z2"]));
}

#[test]
fn conn_oracle_agrees_and_reports_witnesses() {
    let text = stdout_of(&["conn", fixture("a6.json").to_str().unwrap(), "--oracle"]);
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["c"], 2);
    assert_eq!(report["method"], "graph");
    assert_eq!(report["agree"], true);
    assert_eq!(
        report["oracle"]["witness"]["s_side"],
        serde_json::json!([1])
    );
    assert_eq!(
        report["oracle"]["witness"]["t_side"],
        serde_json::json!([2, 3])
    );
}

#[test]
fn section_check_passes_and_emits_reingestible_output() {
    let text = stdout_of(&[
        "section",
        fixture("a6.json").to_str().unwrap(),
        "--iterate",
        "2",
        "--check",
    ]);
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["result"]["dim"], 2);
    assert_eq!(report["result"]["type"], "abstract");
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));

    // the emitted arrangement parses again
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sectioned.json");
    std::fs::write(&path, report["result"].to_string()).unwrap();
    let text = stdout_of(&["analyze", path.to_str().unwrap()]);
    let nested: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(nested["d"], 2);
}

#[test]
fn section_iteration_range_is_validated() {
    let out = run(&[
        "section",
        fixture("a6.json").to_str().unwrap(),
        "--iterate",
        "3",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));
}

#[test]
fn proj_reports_cone_and_checks() {
    let text = stdout_of(&["proj", fixture("proj_three_folds.json").to_str().unwrap()]);
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["gamma_profile"], serde_json::json!([3, 1, 1]));
    assert_eq!(report["lambda12"], 0);
    assert_eq!(report["superdiag_lower_bounds"], serde_json::json!([2]));
    assert_eq!(report["cone"]["dim"], 4);
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn proj_markdown_renders_profile_and_lambda() {
    let text = stdout_of(&[
        "proj",
        fixture("proj_two_surfaces.json").to_str().unwrap(),
        "--md",
    ]);
    assert!(text.contains("| λ_1,2 (any embedding) | 1 |"));
    assert!(text.contains("| #Γ_t | 2 | 1 |"));
}

#[test]
fn input_kind_is_routed() {
    let out = run(&[
        "analyze",
        fixture("proj_two_surfaces.json").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("proj"));

    let out = run(&["proj", fixture("a6.json").to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn input_errors_exit_2() {
    let out = run(&["analyze", "no-such-file.json"]);
    assert_eq!(exit_code(&out), 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let out = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));

    let unknown_var = dir.path().join("unknown.json");
    std::fs::write(
        &unknown_var,
        r#"{"type":"coordinate","variables":["x","y"],"primes":[["q"]]}"#,
    )
    .unwrap();
    let out = run(&["analyze", unknown_var.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown variable"));
}

#[test]
fn non_antichain_warns_by_default_and_errors_in_strict_mode() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("contained.json");
    std::fs::write(
        &path,
        r#"{"type":"coordinate","variables":["x","y","z","w"],"primes":[["x","y"],["x","y","z"],["z","w"]]}"#,
    )
    .unwrap();

    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let report: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(report["s"], 2);

    let out = run(&["analyze", path.to_str().unwrap(), "--strict"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn failing_depth_check_exits_1_with_check_flag() {
    let path = fixture("a6.json");
    // c(A) = 2, so an asserted depth of 4 violates c >= depth - 1
    let out = run(&["analyze", path.to_str().unwrap(), "--depth", "4", "--check"]);
    assert_eq!(exit_code(&out), 1);

    // without --check the report still prints, exit 0
    let out = run(&["analyze", path.to_str().unwrap(), "--depth", "4"]);
    assert_eq!(exit_code(&out), 0);

    // a consistent depth passes
    let out = run(&[
        "analyze",
        path.to_str().unwrap(),
        "--depth",
        "1",
        "--cd",
        "5",
        "--ambient",
        "6",
        "--check",
    ]);
    assert_eq!(exit_code(&out), 0);

    let out = run(&["analyze", path.to_str().unwrap(), "--cd", "5"]);
    assert_eq!(exit_code(&out), 2); // --cd needs --ambient
}

#[test]
fn sweep_clean_run_and_fault_injection() {
    let text = stdout_of(&["sweep", "--max-n", "5", "--max-s", "3"]);
    let summary: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(summary["instances"].as_u64().unwrap() > 100);
    assert_eq!(summary["failures"], serde_json::json!([]));

    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "sweep",
        "--max-n",
        "4",
        "--max-s",
        "2",
        "--inject-fault",
        "--repro-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 1);
    let summary: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let repro = summary["repro_files"][0].as_str().unwrap();
    let body = std::fs::read_to_string(repro).unwrap();
    let instance: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(instance["type"], "coordinate");

    // generating more primes than the oracle cap is an input error
    let out = run(&["sweep", "--max-s", "20", "--max-bruteforce", "16"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn seeded_sweeps_are_reproducible() {
    let args = [
        "sweep", "--count", "1000", "--seed", "1", "--max-n", "12", "--max-s", "4",
    ];
    let first = stdout_of(&args);
    assert_eq!(first, stdout_of(&args));
    let summary: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(summary["instances"], 1000);
    assert_eq!(summary["failures"], serde_json::json!([]));
}

#[test]
fn max_vars_env_caps_input_width() {
    let out = Command::new(env!("CARGO_BIN_EXE_lyubgraph"))
        .args(["analyze", fixture("a6.json").to_str().unwrap()])
        .env("LYUBGRAPH_MAX_VARS", "4")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceed"));

    let out = Command::new(env!("CARGO_BIN_EXE_lyubgraph"))
        .args(["analyze", fixture("a6.json").to_str().unwrap()])
        .env("LYUBGRAPH_MAX_VARS", "6")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0);
}
