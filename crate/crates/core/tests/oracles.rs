//! Reference values computed outside this crate by testing every
//! `(n - 1)`-subset of the complete graph's edges for connectivity, frozen
//! here and compared with both the formulas and the enumerators.

use cayley_core::counting::{
    component_side_count, count_total_trees, count_trees_deg_v1, count_trees_with_degrees,
    lemma1_lhs, marked_tree_count, premoreda_lhs,
};
use cayley_core::enumeration::{
    enumerate_all_trees, enumerate_edge_subsets_pairs, enumerate_trees_with_degrees,
};
use cayley_core::{DegreeSequence, ExactCount};

const TREES: [u64; 7] = [1, 1, 3, 16, 125, 1296, 16807];

const DEG_V1: [(usize, &[u64]); 6] = [
    (2, &[1]),
    (3, &[2, 1]),
    (4, &[9, 6, 1]),
    (5, &[64, 48, 12, 1]),
    (6, &[625, 500, 150, 20, 1]),
    (7, &[7776, 6480, 2160, 360, 30, 1]),
];

const DEGREES_N6: [([usize; 6], u64); 4] = [
    ([2, 2, 1, 1, 1, 3], 12),
    ([1, 1, 1, 1, 1, 5], 1),
    ([2, 2, 2, 2, 1, 1], 24),
    ([3, 3, 1, 1, 1, 1], 6),
];

const PAIRS: [(usize, &[u64]); 5] = [
    (2, &[1, 1]),
    (3, &[3, 6, 3]),
    (4, &[16, 48, 48, 16]),
    (5, &[125, 500, 750, 500, 125]),
    (6, &[1296, 6480, 12960, 12960, 6480, 1296]),
];

#[test]
fn total_counts() {
    for (i, &want) in TREES.iter().enumerate() {
        let n = i + 1;
        assert_eq!(
            count_total_trees(n).unwrap(),
            ExactCount::from(want),
            "n = {n}"
        );
        assert_eq!(
            enumerate_all_trees(n).unwrap().count() as u64,
            want,
            "n = {n}"
        );
    }
    assert_eq!(
        count_total_trees(9).unwrap(),
        ExactCount::from(4_782_969u64)
    );
}

#[test]
fn counts_by_degree_of_vertex_one() {
    for (n, row) in DEG_V1 {
        let mut hist = vec![0u64; n];
        for t in enumerate_all_trees(n).unwrap() {
            hist[t.degree_of(1).unwrap()] += 1;
        }
        for (i, &want) in row.iter().enumerate() {
            let k = i + 1;
            let want_c = ExactCount::from(want);
            assert_eq!(hist[k], want, "n = {n}, k = {k}");
            assert_eq!(
                count_trees_deg_v1(n, k).unwrap(),
                want_c,
                "n = {n}, k = {k}"
            );
            assert_eq!(lemma1_lhs(n, k).unwrap(), want_c, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn counts_by_degree_sequence() {
    for (d, want) in DEGREES_N6 {
        let d = DegreeSequence::new(d.to_vec()).unwrap();
        assert_eq!(
            count_trees_with_degrees(&d),
            ExactCount::from(want),
            "{:?}",
            d.degrees()
        );
        assert_eq!(
            enumerate_trees_with_degrees(&d).unwrap().count() as u64,
            want,
            "{:?}",
            d.degrees()
        );
    }
}

#[test]
fn marked_edge_pairs() {
    for (m, row) in PAIRS {
        for (i, &want) in row.iter().enumerate() {
            let k = i + 1;
            let want_c = ExactCount::from(want);
            assert_eq!(
                enumerate_edge_subsets_pairs(m, k).unwrap().count() as u64,
                want,
                "m = {m}, k = {k}"
            );
            assert_eq!(marked_tree_count(m, k).unwrap(), want_c);
            assert_eq!(component_side_count(m, k).unwrap(), want_c);
            assert_eq!(premoreda_lhs(m, k).unwrap(), want_c);
        }
    }
}
