use std::collections::{BTreeSet, HashMap};

use cayley_core::arith::{binomial, factorial, multinomial, power};
use cayley_core::counting::{
    count_fixed_composition_trees, count_supervertex_trees, count_total_trees, count_trees_deg_v1,
    count_trees_with_degrees, deg_v1_distribution, expand_l3, lhs_factors, recursion_table,
};
use cayley_core::enumeration::{
    enumerate_compositions, enumerate_degree_sequences, prufer_decode, prufer_encode,
    split_by_edge_removal, split_by_root_removal,
};
use cayley_core::sampling::{sample_tree_with_degrees, sample_uniform_tree, SamplerConfig};
use cayley_core::text::{format_edge_list, format_prufer, parse_edge_lists, parse_prufer_line};
use cayley_core::{Composition, DegreeSequence, ExactCount, LabeledTree, PruferSequence};
use proptest::prelude::*;

fn word() -> impl Strategy<Value = PruferSequence> {
    (2usize..40).prop_flat_map(|n| {
        proptest::collection::vec(1..=n, n - 2)
            .prop_map(move |s| PruferSequence::new(n, s).unwrap())
    })
}

fn tree() -> impl Strategy<Value = LabeledTree> {
    word().prop_map(|w| prufer_decode(&w))
}

fn positive_composition(max_k: usize, max_part: usize) -> impl Strategy<Value = Composition> {
    proptest::collection::vec(1..=max_part, 1..=max_k)
        .prop_map(|p| Composition::positive(p).unwrap())
}

proptest! {
    #[test]
    fn codec_round_trips(w in word()) {
        let t = prufer_decode(&w);
        prop_assert_eq!(prufer_encode(&t).unwrap(), w.clone());
        for v in 1..=w.n() {
            prop_assert_eq!(t.degree_of(v).unwrap(), 1 + w.occurrences(v));
        }
    }

    #[test]
    fn canonical_form_ignores_input_order(t in tree(), seed in any::<u64>()) {
        let mut edges: Vec<(usize, usize)> = t.edges().iter().map(|&(u, v)| if seed % 2 == 0 { (v, u) } else { (u, v) }).collect();
        let k = edges.len().max(1);
        edges.rotate_left((seed as usize) % k);
        edges.reverse();
        prop_assert_eq!(LabeledTree::canonicalize(t.n(), &edges).unwrap(), t);
    }

    #[test]
    fn edge_list_text_round_trips(ts in proptest::collection::vec(tree(), 1..5)) {
        let text: String = ts.iter().map(format_edge_list).collect();
        prop_assert_eq!(parse_edge_lists(&text).unwrap(), ts);
    }

    #[test]
    fn prufer_text_round_trips(w in word()) {
        prop_assert_eq!(parse_prufer_line(&format_prufer(&w), Some(w.n()), 1).unwrap(), w);
    }

    #[test]
    fn root_removal_reassembles(t in tree(), pick in any::<usize>()) {
        let v = 1 + pick % t.n();
        let forest = split_by_root_removal(&t, v).unwrap();
        let sizes = forest.sizes().unwrap();
        prop_assert_eq!(sizes.target_sum(), t.n() - 1);
        prop_assert_eq!(sizes.len(), t.degree_of(v).unwrap());
        prop_assert!(forest.components.iter().all(|c| c.is_tree()));
        prop_assert_eq!(forest.reassemble().unwrap(), t);
    }

    #[test]
    fn edge_removal_reassembles(t in tree(), mask in any::<u64>()) {
        let cut: Vec<_> = t.edges().iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, &e)| e).collect();
        let forest = split_by_edge_removal(&t, &cut).unwrap();
        prop_assert_eq!(forest.components.len(), cut.len() + 1);
        prop_assert_eq!(forest.sizes().unwrap().target_sum(), t.n());
        prop_assert_eq!(forest.reassemble().unwrap(), t);
    }

    #[test]
    fn degree_counts_add_up_to_the_total(n in 2usize..9) {
        let sum: ExactCount = enumerate_degree_sequences(n).unwrap().map(|d| count_trees_with_degrees(&d)).sum();
        prop_assert_eq!(sum, count_total_trees(n).unwrap());
    }

    #[test]
    fn deg_v1_distribution_is_a_partition_of_all_trees(n in 2usize..60) {
        let sum: ExactCount = deg_v1_distribution(n).unwrap().into_iter().map(|r| r.count).sum();
        prop_assert_eq!(sum, power(n, n - 2));
    }

    #[test]
    fn deg_v1_matches_degree_marginal(n in 2usize..8, k in 1usize..7) {
        prop_assume!(k < n);
        let marginal: ExactCount = enumerate_degree_sequences(n)
            .unwrap()
            .filter(|d| d.degrees()[0] == k)
            .map(|d| count_trees_with_degrees(&d))
            .sum();
        prop_assert_eq!(marginal, count_trees_deg_v1(n, k).unwrap());
    }

    #[test]
    fn l3_expansion_closed_form(a in positive_composition(6, 5)) {
        let m = a.target_sum();
        let direct = power(m, a.len().saturating_sub(2)) * a.parts().iter().map(|&x| ExactCount::from(x)).product::<ExactCount>();
        if a.len() >= 2 {
            prop_assert_eq!(expand_l3(&a, m).unwrap(), direct);
        }
    }

    #[test]
    fn supervertex_counts_marginalize(a in positive_composition(5, 4)) {
        prop_assume!(a.len() >= 2);
        let m = a.target_sum();
        let sum: ExactCount = enumerate_degree_sequences(a.len())
            .unwrap()
            .map(|d| count_supervertex_trees(&d, &a).unwrap())
            .sum();
        prop_assert_eq!(sum, expand_l3(&a, m).unwrap());
    }

    #[test]
    fn component_factors_scale_the_fixed_composition_count(a in positive_composition(4, 4)) {
        let m = a.target_sum();
        let product = lhs_factors(&a).unwrap().product();
        let fixed = count_fixed_composition_trees(m + 1, &a).unwrap();
        if a.len() >= 2 {
            prop_assert_eq!(product, fixed * power(m, a.len() - 2));
        } else {
            prop_assert_eq!(product * ExactCount::from(m), fixed);
        }
    }

    #[test]
    fn multinomial_is_factorial_ratio(parts in proptest::collection::vec(0usize..7, 0..5)) {
        let total: usize = parts.iter().sum();
        let denom: ExactCount = parts.iter().map(|&p| factorial(p)).product();
        prop_assert_eq!(multinomial(&parts), factorial(total).div_exact(&denom).unwrap());
    }

    #[test]
    fn uniform_samples_are_valid_trees(n in 1usize..30, seed in any::<u64>()) {
        for t in sample_uniform_tree(n, SamplerConfig { seed, count: 5 }).unwrap() {
            prop_assert_eq!(t.n(), n);
            prop_assert_eq!(LabeledTree::canonicalize(n, t.edges()).unwrap(), t);
        }
    }

    #[test]
    fn degree_samples_keep_their_degrees(w in word(), seed in any::<u64>()) {
        let d = DegreeSequence::new(prufer_decode(&w).degrees()).unwrap();
        for t in sample_tree_with_degrees(&d, SamplerConfig { seed, count: 5 }) {
            prop_assert_eq!(t.degrees(), d.degrees());
        }
    }
}

#[test]
fn composition_counts_match_binomials() {
    for total in 0..12 {
        for k in 1..6 {
            let nonneg = enumerate_compositions(total, k, true).unwrap().count();
            assert_eq!(
                ExactCount::from(nonneg),
                binomial(total + k - 1, k - 1).unwrap()
            );
            let pos = enumerate_compositions(total, k, false).unwrap().count();
            let expected = if total >= k {
                binomial(total - 1, k - 1).unwrap()
            } else {
                ExactCount::zero()
            };
            assert_eq!(ExactCount::from(pos), expected);
        }
    }
}

#[test]
fn recursion_table_agrees_with_closed_form_far_out() {
    let table = recursion_table(60).unwrap();
    for (i, t) in table.iter().enumerate() {
        let n = i + 1;
        let expected = if n == 1 {
            ExactCount::one()
        } else {
            power(n, n - 2)
        };
        assert_eq!(*t, expected, "n = {n}");
    }
}

#[test]
fn root_split_sizes_of_every_small_tree() {
    // summing the fixed-composition count over the distinct orderings of a
    // size multiset counts each matching tree once per ordering of its
    // components
    for n in 2..=7 {
        let mut by_sizes: HashMap<Vec<usize>, u64> = HashMap::new();
        for t in cayley_core::enumeration::enumerate_all_trees(n).unwrap() {
            let mut sizes = split_by_root_removal(&t, 1)
                .unwrap()
                .sizes()
                .unwrap()
                .parts()
                .to_vec();
            sizes.sort_unstable();
            *by_sizes.entry(sizes).or_default() += 1;
        }
        for (sorted, count) in by_sizes {
            let orderings: BTreeSet<Vec<usize>> = permutations(&sorted);
            let ordered_sum: ExactCount = orderings
                .iter()
                .map(|p| {
                    count_fixed_composition_trees(n, &Composition::positive(p.clone()).unwrap())
                        .unwrap()
                })
                .sum();
            assert_eq!(
                ordered_sum,
                ExactCount::from(count) * factorial(sorted.len()),
                "n = {n}, sizes {sorted:?}"
            );
        }
    }
}

fn permutations(xs: &[usize]) -> BTreeSet<Vec<usize>> {
    if xs.len() <= 1 {
        return BTreeSet::from([xs.to_vec()]);
    }
    let mut out = BTreeSet::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.insert(p);
        }
    }
    out
}
