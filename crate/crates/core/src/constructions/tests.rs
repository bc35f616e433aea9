use super::*;
use crate::vertex::BitVertex;

fn word(label: &str) -> u64 {
    BitVertex::parse(label, 2).unwrap().word
}

fn labels(c: &Construction) -> Vec<&str> {
    c.vertices.iter().map(String::as_str).collect()
}

#[test]
fn char_matrix_examples() {
    let x = characteristic_matrix(&[word("00"), word("11")], 2, 2).unwrap();
    assert_eq!(x.entries, vec![vec![0, 0], vec![1, 1]]);
    assert!(columns_isomorphic(&[0, 1, 1, 0], &[0, 1, 1, 0]));
    assert!(columns_isomorphic(&[0, 1, 1, 0], &[1, 0, 0, 1]));
    assert!(!columns_isomorphic(&[0, 1, 1, 2], &[1, 0, 2, 1]));
    let x = characteristic_matrix(&[word("000"), word("110"), word("101")], 3, 2).unwrap();
    assert!(char_matrix_is_determining(&x));
    let x = characteristic_matrix(&[word("000"), word("110")], 3, 2).unwrap();
    assert!(!char_matrix_is_determining(&x));
    // H(3,3): second column uses a single symbol.
    let x = characteristic_matrix(&[0, 9], 3, 3).unwrap();
    assert_eq!(x.entries, vec![vec![0, 0, 0], vec![1, 0, 0]]);
    assert!(!char_matrix_is_determining(&x));
    assert!(characteristic_matrix(&[8], 3, 2).is_err());
}

#[test]
fn stirling_values() {
    assert_eq!(stirling2(3, 2), 3u32.into());
    assert_eq!(stirling2(4, 2), 7u32.into());
    assert_eq!(stirling2(0, 0), 1u32.into());
    for r in 1..10 {
        assert_eq!(stirling2(r, 1), 1u32.into());
    }
    for r in 0..=12 {
        for m in 0..=r {
            assert_eq!(stirling2(r, m), stirling2_sum(r, m).unwrap(), "S({r},{m})");
        }
    }
    assert_eq!(stirling2(40, 20).to_string(), stirling2_sum(40, 20).unwrap().to_string());
}

#[test]
fn hamming_examples() {
    for n in 1..=40u64 {
        assert_eq!(hamming_det_number(2, n).unwrap().value, det_hypercube(n as u32));
    }
    for m in 2..=8 {
        assert_eq!(hamming_det_number(m, 1).unwrap().value, m - 1);
    }
    let d = hamming_det_number(3, 3).unwrap();
    assert_eq!((d.value, d.s_r_m.as_str(), d.s_r_m1.as_str()), (3, "1", "3"));
    assert_eq!(hamming_cost_bounds(3, 3).unwrap(), CostBounds::Range { lo: 3, hi: 4 });
    assert!(matches!(hamming_cost_bounds(3, 2).unwrap(), CostBounds::NotApplicable { .. }));
    assert!(matches!(hamming_cost_bounds(5, 2).unwrap(), CostBounds::NotApplicable { .. }));
    assert!(hamming_det_number(1, 3).is_err());
}

#[test]
fn hypercube_sets() {
    let c = hypercube_det_set(8).unwrap();
    assert_eq!(labels(&c), ["00000000", "10101010", "11001100", "11110000"]);
    assert!(c.verified, "{:?}", c.failed_checks());
    let c = hypercube_det_set(10).unwrap();
    assert!(labels(&c).contains(&"1100110011") && labels(&c).contains(&"1111000011"));
    let c = hypercube_det_set(4).unwrap();
    assert_eq!(labels(&c), ["0000", "1010", "1100"]);
    assert!(c.verified);
}

#[test]
fn q2_sets() {
    let q = q2_witnesses(4).unwrap();
    assert_eq!(labels(&q.determining), ["0000", "1000", "1100", "1110"]);
    assert_eq!(q.class.vertices.last().unwrap(), "0111");
    for n in 5..=7 {
        let q = q2_witnesses(n).unwrap();
        assert_eq!((q.determining.size, q.class.size), (n as usize, n as usize + 1));
        assert!(q.determining.verified && q.class.verified, "n={n}");
    }
}

#[test]
fn folded_det_sets() {
    for (n, size) in [(4, 4), (5, 5), (6, 4), (7, 5), (9, 5), (13, 6), (15, 6), (16, 6), (17, 6)] {
        let c = fq_det_set(n).unwrap();
        assert_eq!(c.size, size, "n={n}");
        assert!(c.verified, "n={n}: {:?}", c.failed_checks());
    }
    // The sufficient column-sum condition does not hold in the n = 1 mod 4 branch, yet the set is determining.
    let c = fq_det_set(9).unwrap();
    assert!(!fq_column_sum_condition(&c.words, 9));
    assert!(fq_column_sum_condition(&fq_det_set(11).unwrap().words, 11));
    let c = fq_det_set(4).unwrap();
    let x = characteristic_matrix(&c.words, 4, 2).unwrap();
    assert!(x.entries[0].iter().all(|&e| e == 0));
    let cols = x.columns();
    assert!(cols.iter().all(|c| c.contains(&1)));
    for n in 1..=3 {
        let c = fq_det_set(n).unwrap();
        assert_eq!((c.size as u32, c.method), (det_fq(n), Method::Oracle));
    }
}

#[test]
fn folded_dist_classes() {
    for n in 4..=9 {
        let c = fq_dist_class(n).unwrap();
        assert!(c.verified, "n={n}: {:?}", c.failed_checks());
    }
    let c = fq_dist_class(8).unwrap();
    let tree: Vec<u64> = TREE_SETS[4].1.iter().map(|l| word(l)).collect();
    let mut a = c.words.clone();
    let mut b = tree;
    a.sort_unstable();
    b.sort_unstable();
    assert_eq!(a, b);
    assert_eq!(&labels(&c)[..5], ["10101010", "11101010", "11001010", "11001110", "11001100"]);
    assert!(fq_dist_class(3).is_err());
}

#[test]
fn enhanced_and_others() {
    for n in 4..=9 {
        assert_eq!(enhanced_det_number(n, 1).unwrap(), det_fq(n));
    }
    assert_eq!(enhanced_det_number(5, 3).unwrap(), 6);
    assert_eq!(enhanced_det_number(8, 5).unwrap(), 4);
    assert!(enhanced_det_number(3, 3).is_err());

    assert_eq!(labels(&aq_det_witness(6).unwrap()), ["000000", "111001"]);
    assert_eq!(labels(&aq_det_witness(4).unwrap()), ["0000", "1000", "0001"]);
    for n in 1..=7 {
        let c = aq_det_witness(n).unwrap();
        assert!(c.verified, "n={n}: {:?}", c.failed_checks());
    }
    assert_eq!(labels(&aq_cost_class(4).unwrap()), ["0000", "1001", "0110"]);
    assert_eq!(labels(&aq_cost_class(5).unwrap()), ["00000", "10001", "01110"]);
    for n in 4..=6 {
        let c = aq_cost_class(n).unwrap();
        assert!(c.verified && c.checks.iter().any(|c| c.name == "no 2-vertex class"), "n={n}");
    }

    for n in 4..=6 {
        let w = ltq_witnesses(n).unwrap();
        assert!(w.determining.verified && w.class.verified);
        assert_eq!((w.determining.size, w.class.size), (1, 1));
    }
    let w = ltq_witnesses(3).unwrap();
    assert_eq!((w.determining.size, w.class.size), (2, 3));
}
