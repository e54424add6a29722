mod common;

use std::sync::Arc;

use common::*;
use semiref::{NumericalSemigroup, RelativeIdeal};

#[test]
fn naive_semigroup_tables() {
    for gens in [&[5u64, 7, 9][..], &[7, 10, 13], &[3, 7, 8], &[1]] {
        let s = NumericalSemigroup::from_generators(gens).unwrap();
        let table = members_up_to(gens, 80);
        for (z, &member) in table.iter().enumerate() {
            assert_eq!(s.is_member(z as i64), member, "⟨{s}⟩ at {z}");
        }
    }
}

#[test]
fn naive_canonical_ideal() {
    let s = Arc::new(NumericalSemigroup::from_generators(&[5, 7, 9]).unwrap());
    let naive = canonical(&NaiveSet::of_semigroup(&s), s.frobenius());
    assert!(naive.same_as(&RelativeIdeal::canonical(&s)));
}

#[test]
fn enumeration_matches_gap_subsets() {
    assert_eq!(enumeration_agrees(6).unwrap(), 1 + 1 + 2 + 4 + 7 + 12 + 23);
}

#[test]
fn sums_match() {
    assert!(oracle_sweep(5, OracleOp::Sum).unwrap() > 0);
}

#[test]
fn colons_match() {
    assert!(oracle_sweep(5, OracleOp::Colon).unwrap() > 0);
}

#[test]
fn reflexive_closures_match() {
    assert!(oracle_sweep(6, OracleOp::ReflexiveClosure).unwrap() > 0);
}

#[test]
fn integral_closures_match() {
    assert!(oracle_sweep(6, OracleOp::IntegralClosure).unwrap() > 0);
}

#[test]
fn pinned_colon_values() {
    // E − E for E = (7, 13) + ⟨7,10,13⟩, computed by an independent scan and frozen.
    let s = Arc::new(NumericalSemigroup::from_generators(&[7, 10, 13]).unwrap());
    let e = RelativeIdeal::from_generators(&s, &[7, 13]).unwrap();
    let n = NaiveSet::from_ideal(&e);
    let end = colon(&n, &n);
    let below_40: Vec<i64> = (-20..40).filter(|&z| end.contains(z)).collect();
    assert_eq!(
        below_40,
        vec![
            0, 7, 10, 13, 14, 17, 20, 21, 23, 24, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37,
            38, 39
        ]
    );
    assert!(end.same_as(&RelativeIdeal::from_generators(&s, &[0, 29, 32]).unwrap()));
}
