//! End-to-end tests of the binary: exit codes, scenario-file ingestion, and
//! the structured report schema.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wcop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn temp_file(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("wcop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

const SIGMA1_JSON: &str = r#"{
    "id": "sigma1",
    "labels": ["0", "1", "2"],
    "masses": [1.0, 1.0, 1.0],
    "phi": [1, 1, 1],
    "weight": [[1.0, 0.0], [2.0, 0.0], [0.0, 0.0]]
}"#;

#[test]
fn verify_builtin_passes_with_exit_zero() {
    let out = run(&["verify", "--builtin", "hiszpa", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = parsed.as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["scenario_id"], "hiszpa-n4-alpha0.5");
    let checks = reports[0]["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["name"] == "konopiste_biconditional"));
    assert!(checks.iter().any(|c| c["name"] == "wariat_alpha_beta"));
    assert!(checks.iter().any(|c| c["name"] == "ssrk_hestenes"));
    for check in checks {
        assert!(check["passed"].as_bool().unwrap(), "{check}");
        let residual = check["residual"].as_f64().unwrap();
        let tolerance = check["tolerance"].as_f64().unwrap();
        assert_eq!(check["passed"], serde_json::json!(residual <= tolerance));
    }
}

#[test]
fn verify_scenario_file_records_condition_profile() {
    let path = temp_file("sigma1.json");
    std::fs::write(&path, SIGMA1_JSON).unwrap();
    let out = run(&["verify", "--scenario", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = parsed[0]["checks"].as_array().unwrap();
    let find = |name: &str| {
        checks
            .iter()
            .find(|c| c["name"] == name)
            .unwrap_or_else(|| panic!("missing check {name}"))
    };
    assert_eq!(parsed[0]["scenario_id"], "sigma1");
    // Conditions (c) and (a1) fail but are informational; the chain stays
    // consistent and the run exits 0.
    assert!(find("conditions_c")["notes"]
        .as_str()
        .unwrap()
        .contains("fails"));
    assert!(find("conditions_a1")["notes"]
        .as_str()
        .unwrap()
        .contains("fails"));
    assert!(find("conditions_b1_implies_c")["passed"].as_bool().unwrap());
    // Zero weight at atom 2 skips the nonzero-weight checkers.
    assert!(find("konopiste_skipped")["notes"]
        .as_str()
        .unwrap()
        .contains("precondition not met"));
}

#[test]
fn missing_scenario_is_an_input_error() {
    let out = run(&["verify", "--scenario", "definitely-missing.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn empty_sweep_is_an_input_error() {
    let out = run(&[
        "conditions",
        "--builtin",
        "random",
        "--n",
        "8",
        "--seed",
        "9..8",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("no scenarios"), "{stderr}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--builtin", "nonsense", "--n", "3"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--builtin", "random", "--n", "5"]).status.code(),
        Some(2),
        "random without seeds"
    );
    assert_eq!(
        run(&["verify", "--builtin", "hiszpa", "--n", "4", "--tol", "broken"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn failed_checks_exit_one() {
    // An absurdly tight override forces a legitimate residual to fail.
    let out = run(&[
        "verify",
        "--builtin",
        "random",
        "--n",
        "6",
        "--seed",
        "3",
        "--tol",
        "reciprocal_formula_vs_oracle=1e-300",
    ]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed = parsed[0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["name"] == "reciprocal_formula_vs_oracle" && c["passed"] == false);
    assert!(failed);
}

#[test]
fn report_emits_quantities() {
    let out = run(&["report", "--builtin", "random", "--n", "5", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let quantities = parsed[0]["quantities"].as_object().unwrap();
    for key in [
        "h_phi_w",
        "h_phi",
        "w_hat",
        "one_hat",
        "forward_matrix",
        "reciprocal_matrix",
        "adjoint_reciprocal_matrix",
        "multiplication_reciprocal_diagonal",
        "composition_reciprocal_matrix",
        "range_projection",
        "kernel_projection",
        "singular_values",
    ] {
        assert!(quantities.contains_key(key), "missing quantity {key}");
    }
    // Complex entries are [re, im] pairs.
    assert!(quantities["w_hat"][0].as_array().unwrap().len() == 2);
}

#[test]
fn report_fixture_quantities_match_derivations() {
    let path = temp_file("sigma1-report.json");
    std::fs::write(&path, SIGMA1_JSON).unwrap();
    let out = run(&["report", "--scenario", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let q = &parsed[0]["quantities"];
    assert_eq!(q["h_phi_w"], serde_json::json!([0.0, 5.0, 0.0]));
    let row = q["reciprocal_matrix"][1].as_array().unwrap();
    assert!((row[0][0].as_f64().unwrap() - 0.2).abs() < 1e-15);
    assert!((row[1][0].as_f64().unwrap() - 0.4).abs() < 1e-15);
    assert_eq!(row[2][0].as_f64().unwrap(), 0.0);
    let sv = q["singular_values"].as_array().unwrap();
    assert!((sv[0].as_f64().unwrap() - 5.0_f64.sqrt()).abs() < 1e-12);
    assert!(sv[1].as_f64().unwrap().abs() < 1e-12);
}

#[test]
fn trend_diagnostics_for_line_truncations() {
    let out = run(&["report", "--builtin", "hiszpa_plus", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        parsed[0]["quantities"]["trend_h_phi_at_zero"],
        serde_json::json!(3.0)
    );

    let out = run(&["report", "--builtin", "hiszpa_minus", "--n", "4", "--q", "0.25"]);
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let ratios = parsed[0]["quantities"]["trend_mass_ratio"].as_array().unwrap();
    assert_eq!(ratios.len(), 4);
    for r in ratios {
        assert!((r.as_f64().unwrap() - 0.25).abs() < 1e-15);
    }
    assert!(parsed[0]["quantities"]["trend_weighted_to_plain_norm_ratio"]
        .as_array()
        .unwrap()
        .len()
        == 4);
}

#[test]
fn conditions_sweep_profiles() {
    let out = run(&[
        "conditions",
        "--builtin",
        "random",
        "--n",
        "8",
        "--profile",
        "fiber_constant_weight",
        "--seed",
        "1..10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let profiles = parsed["profiles"].as_array().unwrap();
    assert_eq!(profiles.len(), 10);
    for profile in profiles {
        assert_eq!(profile["c"]["status"], "holds");
        assert_eq!(profile["a1"]["status"], "holds");
    }
    let checks = parsed["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["passed"].as_bool().unwrap()));
}

#[test]
fn text_format_is_available() {
    let out = run(&[
        "verify",
        "--builtin",
        "random",
        "--n",
        "4",
        "--seed",
        "11",
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("overall: PASS"));
    assert!(text.contains("[PASS]"));
}
