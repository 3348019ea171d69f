//! End-to-end acceptance: runs each numbered criterion of the built-in
//! verification suite as its own test, printing one pass/fail line per
//! criterion (visible with `--nocapture`) and enforcing a time budget.

use std::time::{Duration, Instant};

use spgames::verify::{criterion_title, run_criterion};

fn run(n: usize, budget: Duration) {
    let start = Instant::now();
    let checks = run_criterion(n);
    let elapsed = start.elapsed();
    let pass = !checks.is_empty() && checks.iter().all(|c| c.pass);
    println!(
        "criterion {:>2}  {:<36}  {}  ({} checks, {} ms)",
        n,
        criterion_title(n),
        if pass { "PASS" } else { "FAIL" },
        checks.len(),
        elapsed.as_millis()
    );
    for check in checks.iter().filter(|c| !c.pass) {
        println!(
            "    {}: expected {}, got {}",
            check.name, check.expected, check.got
        );
    }
    assert!(pass, "criterion {n} ({}) failed", criterion_title(n));
    assert!(
        elapsed <= budget,
        "criterion {n} took {elapsed:?}, budget {budget:?}"
    );
}

#[test]
fn criterion_01_snort_path3_facets() {
    run(1, Duration::from_secs(5));
}

#[test]
fn criterion_02_day2_value_catalog() {
    run(2, Duration::from_secs(10));
}

#[test]
fn criterion_03_integer_constructions() {
    run(3, Duration::from_secs(30));
}

#[test]
fn criterion_04_fraction_and_dyadic_constructions() {
    run(4, Duration::from_secs(60));
}

#[test]
fn criterion_05_switch_and_tiny_constructions() {
    run(5, Duration::from_secs(30));
}

#[test]
fn criterion_06_nim_piles_and_grundy_crosscheck() {
    run(6, Duration::from_secs(30));
}

#[test]
fn criterion_07_impossibility_census() {
    run(7, Duration::from_secs(60));
}

#[test]
fn criterion_08_domineering_regression() {
    run(8, Duration::from_secs(30));
}

#[test]
fn criterion_09_algebraic_property_sweeps() {
    run(9, Duration::from_secs(60));
}

#[test]
fn criterion_10_sp_tree_recognition() {
    run(10, Duration::from_secs(10));
}

#[test]
fn criterion_11_col_values_on_paths() {
    run(11, Duration::from_secs(30));
}
