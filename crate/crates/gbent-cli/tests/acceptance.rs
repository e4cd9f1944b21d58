//! Acceptance gate: one test per verification criterion. Each test prints
//! the criterion's one-line outcome and then asserts it passed, so a plain
//! `cargo test --test acceptance` doubles as a readable report.

use gbent_cli::verify;

fn run(id: u32) {
    let outcome = verify::criterion(id).expect("criterion ids are 1 through 10");
    println!("{}", outcome.line());
    assert!(outcome.passed, "{}", outcome.line());
}

#[test]
fn criterion_01_bent_function_counts() {
    run(1);
}

#[test]
fn criterion_02_quaternary_regular_totals() {
    run(2);
}

#[test]
fn criterion_03_two_variable_classification() {
    run(3);
}

#[test]
fn criterion_04_four_variable_classification() {
    run(4);
}

#[test]
fn criterion_05_representative_orbit_membership() {
    run(5);
}

#[test]
fn criterion_06_odd_variable_exhaustive_scans() {
    run(6);
}

#[test]
fn criterion_07_decomposition_round_trips() {
    run(7);
}

#[test]
fn criterion_08_octal_cross_route_agreement() {
    run(8);
}

#[test]
fn criterion_09_self_dual_correspondence() {
    run(9);
}

#[test]
fn criterion_10_algebraic_property_suites() {
    run(10);
}
