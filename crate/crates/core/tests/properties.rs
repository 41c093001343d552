mod common;

use common::props::SUITES;

fn suite(name: &str) {
    let (_, cases, run) = SUITES.iter().find(|s| s.0 == name).unwrap();
    if let Err(e) = run(*cases) {
        panic!("{name}: {e}");
    }
}

#[test]
fn sums_and_products_ignore_operand_order() {
    suite("canonical form under operand permutation");
}

#[test]
fn gcd_divides_with_coprime_cofactors() {
    suite("gcd divisibility and coprime cofactors");
}

#[test]
fn heuristic_gcd_agrees_with_prs() {
    suite("heuristic gcd agrees with prs");
}

#[test]
fn normal_is_idempotent_and_value_preserving() {
    suite("normal idempotent and value preserving");
}

#[test]
fn derivative_matches_central_difference() {
    suite("diff against central differences");
}

#[test]
fn series_truncation_is_consistent() {
    suite("series truncation consistency");
}
