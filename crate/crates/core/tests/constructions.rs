use std::sync::Arc;

use cubesym_core::constructions::{
    char_matrix_is_determining, characteristic_matrix, det_fq, fq_det_set, fq_dist_class, hypercube_det_set,
    q2_witnesses,
};
use cubesym_core::symmetry::is_determining_set;
use cubesym_core::{automorphism_group, build_family, FamilySpec, PermGroup};
use proptest::prelude::*;

fn group(spec: FamilySpec) -> PermGroup {
    automorphism_group(Arc::new(build_family(&spec).unwrap())).unwrap()
}

fn subsets(n: u32, max: usize, f: &mut impl FnMut(&[u32])) {
    fn go(n: u32, start: u32, max: usize, cur: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if !cur.is_empty() {
            f(cur);
        }
        if cur.len() == max {
            return;
        }
        for v in start..n {
            cur.push(v);
            go(n, v + 1, max, cur, f);
            cur.pop();
        }
    }
    go(n, 0, max, &mut Vec::new(), f);
}

fn matrix_matches_group(spec: FamilySpec, n: u32, alphabet: u32) {
    let g = group(spec.clone());
    let vertices = g.graph().vertex_count() as u32;
    let mut checked = 0;
    subsets(vertices, 4, &mut |set| {
        let words: Vec<u64> = set.iter().map(|&v| u64::from(v)).collect();
        let by_matrix = char_matrix_is_determining(&characteristic_matrix(&words, n, alphabet).unwrap());
        assert_eq!(by_matrix, is_determining_set(&g, set).unwrap(), "{spec} {set:?}");
        checked += 1;
    });
    assert!(checked > 0);
}

#[test]
fn characteristic_matrix_criterion_q3() {
    matrix_matches_group(FamilySpec::Hypercube { n: 3 }, 3, 2);
}

#[test]
fn characteristic_matrix_criterion_q4() {
    matrix_matches_group(FamilySpec::Hypercube { n: 4 }, 4, 2);
}

#[test]
fn characteristic_matrix_criterion_rook_graph() {
    matrix_matches_group(FamilySpec::Hamming { m: 3, n: 2 }, 2, 3);
}

/// Every determining set of `FQ_n` is determining for `Q_n`, translates to
/// one through `0`, and has a one in every position.
fn folded_set_facts(n: u32, set: &[u32], fq: &PermGroup, q: &PermGroup) {
    assert!(is_determining_set(q, set).unwrap(), "FQ{n} {set:?} not determining for Q{n}");
    for &a in set {
        let moved: Vec<u32> = set.iter().map(|&v| v ^ a).collect();
        assert!(is_determining_set(fq, &moved).unwrap(), "FQ{n} {set:?} translated by {a}");
    }
    let union = set.iter().fold(0, |acc, &v| acc | v);
    assert_eq!(union, (1 << n) - 1, "FQ{n} {set:?} misses a position");
}

#[test]
fn folded_determining_sets_exhaustive_n4() {
    let (fq, q) = (group(FamilySpec::Folded { n: 4 }), group(FamilySpec::Hypercube { n: 4 }));
    let mut found = 0;
    subsets(16, det_fq(4) as usize + 1, &mut |set| {
        if set.len() >= det_fq(4) as usize && is_determining_set(&fq, set).unwrap() {
            folded_set_facts(4, set, &fq, &q);
            found += 1;
        }
    });
    assert!(found > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]
    #[test]
    fn folded_determining_sets_sampled(n in 5u32..=6, raw in proptest::collection::btree_set(0u32..64, 3..7)) {
        let (fq, q) = (group(FamilySpec::Folded { n }), group(FamilySpec::Hypercube { n }));
        let set: Vec<u32> = raw.into_iter().map(|v| v % (1 << n)).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        if is_determining_set(&fq, &set).unwrap() {
            folded_set_facts(n, &set, &fq, &q);
        }
    }
}

#[test]
fn folded_det_sets_match_formula() {
    for n in 4..=64 {
        let c = fq_det_set(n).unwrap();
        assert_eq!(c.size as u32, det_fq(n), "n={n}");
        assert!(c.verified, "n={n}: {:?}", c.failed_checks());
    }
}

#[test]
fn hypercube_det_sets_verify() {
    for n in 1..=64 {
        let c = hypercube_det_set(n).unwrap();
        assert!(c.verified, "n={n}: {:?}", c.failed_checks());
    }
}

#[test]
fn squared_path_witness() {
    for n in 4..=32 {
        let w = q2_witnesses(n).unwrap();
        assert_eq!(w.determining.size, n as usize);
        assert!(w.determining.verified, "n={n}: {:?}", w.determining.failed_checks());
        assert_eq!(w.class.size, n as usize + 1);
    }
}

#[test]
fn folded_dist_classes_verify() {
    for n in 4..=16 {
        let c = fq_dist_class(n).unwrap();
        assert!(c.verified, "n={n}: {:?}", c.failed_checks());
    }
}
