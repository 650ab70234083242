//! Acceptance gate: one test per release criterion, at pinned parameters.
//!
//! Every comparison is exact (arbitrary-precision rationals, zero
//! tolerance). Each test prints a single pass/fail line; run with
//! `cargo test --test acceptance -- --nocapture` to see them.

use std::time::Instant;

use gwtqft::tqft::DEFAULT_BUDGET;
use gwtqft::verify::{
    check_annulus, check_caps_genus0, check_concatenation, check_connected, check_d1_gluing,
    check_d2, check_dw_oracle, check_lifting, check_structure, CheckOutcome,
};

fn report(criterion: usize, outcome: &CheckOutcome) {
    let verdict = if outcome.passed { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion} [{}]: {verdict} - {}",
        outcome.name, outcome.detail
    );
    assert!(outcome.passed, "criterion {criterion} failed: {}", outcome.detail);
}

#[test]
fn criterion_1_annulus_matches_inverse_pairing() {
    report(1, &check_annulus(5, 16));
}

#[test]
fn criterion_2_degree_one_gluing_laws() {
    report(2, &check_d1_gluing(16));
}

#[test]
fn criterion_3_cap_decomposition_of_the_sphere() {
    report(3, &check_caps_genus0(5, 16));
}

#[test]
fn criterion_4_character_sums_match_permutation_counts() {
    let start = Instant::now();
    let outcome = check_dw_oracle(DEFAULT_BUDGET);
    let elapsed = start.elapsed();
    report(4, &outcome);
    assert!(
        elapsed.as_secs() < 60,
        "oracle sweep took {elapsed:?}, budget is one minute"
    );
}

#[test]
fn criterion_5_class_algebra_structure_theory() {
    report(5, &check_structure(6, 5));
}

#[test]
fn criterion_6_idempotent_lifting_fixtures() {
    let start = Instant::now();
    let outcome = check_lifting(100, 16, 1729);
    let elapsed = start.elapsed();
    report(6, &outcome);
    assert!(
        elapsed.as_secs() < 10,
        "lifting fixtures took {elapsed:?}, budget is ten seconds"
    );
}

#[test]
fn criterion_7_degree_two_closed_theory() {
    report(7, &check_d2(16));
}

#[test]
fn criterion_8_connected_torus_counts() {
    report(8, &check_connected(6, 16));
}

#[test]
fn criterion_9_concatenation_of_relative_invariants() {
    report(9, &check_concatenation(4));
}
