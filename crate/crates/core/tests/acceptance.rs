//! One test per acceptance criterion. Each prints a PASS/FAIL line with the
//! failing checks, then asserts.

use infhecke_core::acceptance;

fn criterion(id: u8) {
    let outcome = acceptance::run(id);
    println!("{outcome}");
    assert!(outcome.pass, "criterion {id} failed");
}

#[test]
fn criterion_01_fg_consistency() {
    criterion(1);
}

#[test]
fn criterion_02_delta_commutators() {
    criterion(2);
}

#[test]
fn criterion_03_centrality() {
    criterion(3);
}

#[test]
fn criterion_04_leading_data() {
    criterion(4);
}

#[test]
fn criterion_05_verma_eigenvalue() {
    criterion(5);
}

#[test]
fn criterion_06_z1_structure() {
    criterion(6);
}

#[test]
fn criterion_07_finite_dimensionality() {
    criterion(7);
}

#[test]
fn criterion_08_abelianization() {
    criterion(8);
}

#[test]
fn criterion_09_families() {
    criterion(9);
}

#[test]
fn criterion_10_engine_soundness() {
    criterion(10);
}
