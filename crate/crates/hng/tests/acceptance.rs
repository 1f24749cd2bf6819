//! Acceptance gate: each criterion runs one verification suite over the
//! shared context and prints a single pass/fail line.

use std::sync::OnceLock;

use hng::report::{build_context, run_suite, SuiteContext};

static CTX: OnceLock<SuiteContext> = OnceLock::new();

const SEED: u64 = 20260823;

fn ctx() -> &'static SuiteContext {
    CTX.get_or_init(|| build_context().expect("catalogs and obstruction sets"))
}

fn criterion(number: usize, title: &str, suite: &str) {
    let report = run_suite(suite, ctx(), SEED).expect("suite must run");
    let verdict = if report.passed() { "pass" } else { "fail" };
    println!("criterion {number:2} ({title}): {verdict}");
    assert!(report.passed(), "{}", report.to_text());
}

#[test]
fn criterion_01_enumeration_counts() {
    criterion(1, "enumeration counts vs oracle", "enumeration");
}

#[test]
fn criterion_02_obstruction_set() {
    criterion(2, "52 minimal obstructions, tight and complement-closed", "obstructions");
}

#[test]
fn criterion_03_obstruction_structure() {
    criterion(3, "bipartite/complement split and sun-with-pendant", "obstruction-structure");
}

#[test]
fn criterion_04_recognition_equivalence() {
    criterion(4, "obstruction-freeness = hereditary defect <= 1", "recognition");
}

#[test]
fn criterion_05_inclusion_chain() {
    criterion(5, "class inclusions and threshold coincidence", "inclusions");
}

#[test]
fn criterion_06_apex_perfect() {
    criterion(6, "apex-perfect witnesses and chi <= omega + 1", "apex-perfect");
}

#[test]
fn criterion_07_fast_invariants() {
    criterion(7, "structure-based invariants vs exact solvers", "fast-invariants");
}

#[test]
fn criterion_08_line_graphs() {
    criterion(8, "line-graph membership vs root obstructions", "line-graphs");
}

#[test]
fn criterion_09_claw_and_triangle() {
    criterion(9, "claw-free and triangle-free characterizations", "claw-triangle");
}

#[test]
fn criterion_10_shape_checks() {
    criterion(10, "shape split and family instances", "family-shapes");
}

#[test]
fn criterion_11_type_table() {
    criterion(11, "C5 type-compatibility table", "type-table");
}
