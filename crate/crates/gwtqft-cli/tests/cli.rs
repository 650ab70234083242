//! End-to-end tests of the `gwtqft` binary: JSON shapes, text mode,
//! exit codes, environment overrides, and byte-stable output.

use std::process::{Command, Output};

fn gwtqft(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gwtqft"))
        .args(args)
        .env_remove("GWTQFT_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn partitions_lists_canonical_order() {
    let v = stdout_json(&gwtqft(&["partitions", "3"]));
    assert_eq!(v["count"], 3);
    let labels: Vec<&str> = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels, ["(3)", "(2,1)", "(1,1,1)"]);
    assert_eq!(v["classes"][0]["centralizer_order"], 3);
    assert_eq!(v["classes"][2]["class_size"], 1);
}

#[test]
fn characters_matches_library_table() {
    let v = stdout_json(&gwtqft(&["characters", "3"]));
    assert_eq!(v["table"][0], serde_json::json!([1, 1, 1]));
    assert_eq!(v["table"][1], serde_json::json!([-1, 0, 2]));
    assert_eq!(v["table"][2], serde_json::json!([1, -1, 1]));
    assert_eq!(v["dimensions"], serde_json::json!([1, 2, 1]));
}

#[test]
fn cap_series_matches_library() {
    let v = stdout_json(&gwtqft(&["cap", "2", "--order", "6"]));
    let expected = gwtqft::closedforms::cap(
        &gwtqft::partitions::Partition::new(vec![2]).unwrap(),
        6,
    );
    assert_eq!(v["series"], serde_json::to_value(&expected).unwrap());
    assert_eq!(v["series"]["coeffs"][1], "-1/4");
}

#[test]
fn closed_torus_value_is_two() {
    let v = stdout_json(&gwtqft(&["closed", "--model", "d2", "--genus", "1", "--order", "8"]));
    let coeffs = v["series"]["coeffs"].as_array().unwrap();
    assert_eq!(coeffs[0], "2");
    assert!(coeffs[1..].iter().all(|c| c == "0"));
}

#[test]
fn closed_text_mode_prints_polynomial() {
    let out = gwtqft(&["closed", "--model", "d2", "--genus", "1", "--order", "4", "--text"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "2 + O(t^4)");
}

#[test]
fn relative_boundary_invariant_is_constant() {
    let v = stdout_json(&gwtqft(&[
        "relative", "3", "--genus", "1", "--boundaries", "3", "--order", "4",
    ]));
    assert_eq!(v["model"], "dw");
    assert_eq!(v["series"]["coeffs"][0], "3");
    // The algebraic route agrees.
    let w = stdout_json(&gwtqft(&[
        "relative", "3", "--genus", "1", "--boundaries", "3", "--order", "4", "--model", "class",
    ]));
    assert_eq!(v["series"], w["series"]);
}

#[test]
fn hurwitz_reports_rational_counts() {
    let v = stdout_json(&gwtqft(&["hurwitz", "2", "--boundaries", "2;2"]));
    assert_eq!(v["count"], "1/2");
}

#[test]
fn hurwitz_over_budget_exits_three() {
    let out = gwtqft(&["hurwitz", "3", "--genus", "1", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("budget of 10"), "{err}");
}

#[test]
fn hurwitz_budget_env_and_flag_precedence() {
    let out = Command::new(env!("CARGO_BIN_EXE_gwtqft"))
        .args(["hurwitz", "3", "--genus", "1"])
        .env("GWTQFT_BUDGET", "10")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(3));

    // An explicit flag overrides the environment.
    let out = Command::new(env!("CARGO_BIN_EXE_gwtqft"))
        .args(["hurwitz", "3", "--genus", "1", "--budget", "100000"])
        .env("GWTQFT_BUDGET", "10")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));

    let out = Command::new(env!("CARGO_BIN_EXE_gwtqft"))
        .args(["hurwitz", "3", "--genus", "1"])
        .env("GWTQFT_BUDGET", "not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(gwtqft(&["cap"]).status.code(), Some(2));
    assert_eq!(gwtqft(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn bad_boundary_spec_exits_one_with_offset() {
    let out = gwtqft(&["relative", "3", "--boundaries", "2,1;x", "--order", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("byte 4"), "{err}");
}

#[test]
fn lift_output_is_byte_stable() {
    let first = gwtqft(&["lift", "3", "--order", "6"]);
    let second = gwtqft(&["lift", "3", "--order", "6"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    // Eigenvalues (d!/dim)^2 in canonical order: 36, 9, 36.
    assert_eq!(v["eigenvalues"][0]["coeffs"][0], "36");
    assert_eq!(v["eigenvalues"][1]["coeffs"][0], "9");
    assert_eq!(v["eigenvalues"][2]["coeffs"][0], "36");
}

#[test]
fn connected_torus_counts_are_harmonic() {
    let v = stdout_json(&gwtqft(&[
        "connected", "--model", "dw", "--genus", "1", "--max-degree", "4", "--order", "2",
    ]));
    let degree_four = &v["connected"][3]["coeffs"];
    assert_eq!(degree_four[0], "7/4");
    assert_eq!(degree_four[1], "0");
}

#[test]
fn connected_models_enforce_degree_coverage() {
    let out = gwtqft(&["connected", "--model", "d1", "--max-degree", "2", "--order", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = gwtqft(&["connected", "--model", "d2", "--max-degree", "2", "--genus", "1", "--order", "4"]);
    assert!(out.status.success());
}

#[test]
fn verify_single_check_passes() {
    let out = gwtqft(&["verify", "--suite", "caps-genus0"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS  caps-genus0"), "{text}");
    assert!(text.contains("1/1 checks passed"), "{text}");
}

#[test]
fn verify_unknown_suite_exits_one() {
    let out = gwtqft(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn verify_quick_suite_passes() {
    let out = gwtqft(&["verify", "--suite", "quick"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("9/9 checks passed"), "{text}");
}
