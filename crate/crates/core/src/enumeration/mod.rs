//! Exhaustive generators used as brute-force oracles for the counting
//! formulas. All streams are lazy and deterministic.

mod compositions;
mod forest;
mod prufer;

use itertools::Itertools;

pub use compositions::{enumerate_compositions, Compositions};
pub use forest::{split_by_edge_removal, split_by_root_removal, Component, Forest};
pub use prufer::{prufer_decode, prufer_encode, PruferWords};

use crate::error::{Error, Result};
use crate::tree::{Composition, DegreeSequence, DisjointSets, Edge, LabeledTree};

/// Largest `n` for Prüfer-sweep enumeration (9^7 trees at the cap).
pub const N_CAP: usize = 9;
/// Largest `n` for edge-subset enumeration of the complete graph.
pub const N_CAP_EDGES: usize = 6;
/// Largest `m` for (tree, edge subset) pair enumeration and component
/// assembly.
pub const N_CAP_PAIRS: usize = 6;
/// Largest total size for the super-vertex joining oracle.
pub const N_CAP_JOININGS: usize = 8;

fn check_cap(what: &'static str, requested: usize, cap: usize) -> Result<()> {
    if requested > cap {
        Err(Error::CapExceeded {
            what,
            requested,
            cap,
        })
    } else {
        Ok(())
    }
}

/// Every Prüfer word for `n`, in lexicographic order.
pub fn enumerate_prufer_sequences(n: usize) -> Result<PruferWords> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    check_cap("n", n, N_CAP)?;
    Ok(PruferWords::new(n))
}

/// Every labeled tree on `1..=n` exactly once, in lexicographic order of the
/// Prüfer word.
pub fn enumerate_all_trees(n: usize) -> Result<TreeSweep> {
    Ok(TreeSweep {
        words: enumerate_prufer_sequences(n)?,
        started: false,
        n,
    })
}

/// Lazy Prüfer sweep; see [`enumerate_all_trees`].
#[derive(Debug, Clone)]
pub struct TreeSweep {
    words: PruferWords,
    started: bool,
    n: usize,
}

impl Iterator for TreeSweep {
    type Item = LabeledTree;

    fn next(&mut self) -> Option<LabeledTree> {
        let n = self.n;
        if !self.started {
            self.started = true;
            // PruferWords starts at the all-ones word.
            let first = vec![1; n.saturating_sub(2)];
            return Some(prufer::decode_symbols(n, &first));
        }
        self.words.advance().map(|w| prufer::decode_symbols(n, w))
    }
}

/// Every spanning tree of the complete graph found by testing each
/// `(n - 1)`-subset of its edges. Independent of the Prüfer codec.
pub fn enumerate_all_trees_by_edges(n: usize) -> Result<impl Iterator<Item = LabeledTree>> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    check_cap("n", n, N_CAP_EDGES)?;
    let all_edges: Vec<Edge> = (1..=n).tuple_combinations().collect();
    let subsets: Box<dyn Iterator<Item = Vec<Edge>>> = if n == 1 {
        Box::new(std::iter::once(Vec::new()))
    } else {
        Box::new(all_edges.into_iter().combinations(n - 1))
    };
    Ok(subsets.filter_map(move |edges| {
        let mut sets = DisjointSets::new(n + 1);
        if edges.iter().all(|&(u, v)| sets.union(u, v)) {
            // combinations preserve the sorted order of `all_edges`
            Some(LabeledTree::from_canonical(n, edges))
        } else {
            None
        }
    }))
}

/// Trees whose degree vector is exactly `d`: distinct permutations of the
/// Prüfer multiset (vertex `i` repeated `d_i - 1` times), decoded.
pub fn enumerate_trees_with_degrees(d: &DegreeSequence) -> Result<DegreeTrees> {
    check_cap("n", d.len(), N_CAP)?;
    Ok(DegreeTrees {
        n: d.len(),
        next: Some(d.prufer_multiset()),
    })
}

#[derive(Debug, Clone)]
pub struct DegreeTrees {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for DegreeTrees {
    type Item = LabeledTree;

    fn next(&mut self) -> Option<LabeledTree> {
        let word = self.next.as_mut()?;
        let tree = prufer::decode_symbols(self.n, word);
        if !next_permutation(word) {
            self.next = None;
        }
        Some(tree)
    }
}

/// Rearranges into the lexicographically next permutation. Returns false
/// (leaving the slice untouched) at the last one.
fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let Some(i) = (0..xs.len() - 1).rev().find(|&i| xs[i] < xs[i + 1]) else {
        return false;
    };
    let j = (i + 1..xs.len())
        .rev()
        .find(|&j| xs[j] > xs[i])
        .expect("xs[i+1] > xs[i]");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

/// Every pair (tree on `m` vertices, set of `k - 1` of its edges), each
/// exactly once.
pub fn enumerate_edge_subsets_pairs(
    m: usize,
    k: usize,
) -> Result<impl Iterator<Item = (LabeledTree, Vec<Edge>)>> {
    if m < 2 || k == 0 || k > m {
        return Err(Error::OutOfRange(format!(
            "need 2 <= m and 1 <= k <= m, got m={m}, k={k}"
        )));
    }
    check_cap("m", m, N_CAP_PAIRS)?;
    Ok(enumerate_all_trees(m)?.flat_map(move |tree| {
        let subsets: Vec<Vec<Edge>> = tree.edges().iter().copied().combinations(k - 1).collect();
        subsets.into_iter().map(move |cut| (tree.clone(), cut))
    }))
}

/// Counts `f` over every index tuple with `0 <= idx[i] < radices[i]`; the
/// empty tuple is visited once.
fn for_each_index_tuple(radices: &[usize], mut f: impl FnMut(&[usize])) {
    if radices.contains(&0) {
        return;
    }
    let mut idx = vec![0; radices.len()];
    loop {
        f(&idx);
        let mut i = idx.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < radices[i] {
                break;
            }
            idx[i] = 0;
        }
    }
}

/// Ordered partitions of `vertices` into consecutive groups of the given
/// sizes. Groups keep ascending order internally.
fn ordered_set_partitions(vertices: &[usize], sizes: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = sizes.split_first() else {
        return if vertices.is_empty() {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    };
    let mut out = Vec::new();
    for group in vertices.iter().copied().combinations(first) {
        let remaining: Vec<usize> = vertices
            .iter()
            .copied()
            .filter(|v| group.binary_search(v).is_err())
            .collect();
        for mut tail in ordered_set_partitions(&remaining, rest) {
            tail.insert(0, group.clone());
            out.push(tail);
        }
    }
    out
}

/// Builds every tree on `m` vertices with `k - 1` marked edges the
/// component-first way, calling `visit(tree, marked)` once per construction:
///
/// 1. split `1..=m` into an ordered list of `k` labeled groups,
/// 2. pick a spanning tree inside every group,
/// 3. pick a tree on the `k` groups, and for each of its edges one endpoint
///    in each of the two groups it joins.
///
/// Every (tree, marked edges) pair is produced once per ordering of its
/// `k` components, i.e. `k!` times. Returns the number of constructions.
pub fn visit_component_assemblies(
    m: usize,
    k: usize,
    mut visit: impl FnMut(&LabeledTree, &[Edge]),
) -> Result<u64> {
    if m < 1 || k == 0 || k > m {
        return Err(Error::OutOfRange(format!(
            "need 1 <= k <= m, got m={m}, k={k}"
        )));
    }
    check_cap("m", m, N_CAP_PAIRS)?;
    let vertices: Vec<usize> = (1..=m).collect();
    let super_trees: Vec<LabeledTree> = enumerate_all_trees(k)?.collect();
    // trees on 1..=a for each group size a, relabeled per group below
    let local_trees: Vec<Vec<LabeledTree>> = (0..=m)
        .map(|a| {
            if a == 0 {
                Vec::new()
            } else {
                enumerate_all_trees(a).unwrap().collect()
            }
        })
        .collect();

    let mut constructions = 0u64;
    for sizes in enumerate_compositions(m, k, false)? {
        let sizes = sizes.parts();
        for groups in ordered_set_partitions(&vertices, sizes) {
            let tree_radices: Vec<usize> = sizes.iter().map(|&a| local_trees[a].len()).collect();
            for_each_index_tuple(&tree_radices, |choice| {
                let inner: Vec<Edge> = choice
                    .iter()
                    .enumerate()
                    .flat_map(|(g, &t)| {
                        let group = &groups[g];
                        local_trees[sizes[g]][t].edges().iter().map(move |&(u, v)| {
                            let (x, y) = (group[u - 1], group[v - 1]);
                            (x.min(y), x.max(y))
                        })
                    })
                    .collect();
                for super_tree in &super_trees {
                    let super_edges = super_tree.edges();
                    let endpoint_radices: Vec<usize> = super_edges
                        .iter()
                        .flat_map(|&(i, j)| [sizes[i - 1], sizes[j - 1]])
                        .collect();
                    for_each_index_tuple(&endpoint_radices, |ends| {
                        let marked: Vec<Edge> = super_edges
                            .iter()
                            .enumerate()
                            .map(|(e, &(i, j))| {
                                let x = groups[i - 1][ends[2 * e]];
                                let y = groups[j - 1][ends[2 * e + 1]];
                                (x.min(y), x.max(y))
                            })
                            .collect();
                        let mut all = inner.clone();
                        all.extend_from_slice(&marked);
                        let tree = LabeledTree::canonicalize(m, &all)
                            .expect("component assembly always yields a tree");
                        let mut marked = marked;
                        marked.sort_unstable();
                        visit(&tree, &marked);
                        constructions += 1;
                    });
                }
            });
        }
    }
    Ok(constructions)
}

/// Ways to join the components of sizes `sizes` (component `i` owning a
/// consecutive block of labels) into one tree using `k - 1` edges between
/// distinct components. Yields the joining edges.
pub fn enumerate_supervertex_joinings(
    sizes: &Composition,
) -> Result<impl Iterator<Item = Vec<Edge>>> {
    if sizes.allows_zero() {
        return Err(Error::OutOfRange("component sizes must be positive".into()));
    }
    let m = sizes.target_sum();
    check_cap("m", m, N_CAP_JOININGS)?;
    let k = sizes.len();
    let owner = component_owner(sizes);
    let cross: Vec<Edge> = (1..=m)
        .tuple_combinations()
        .filter(|&(u, v)| owner[u] != owner[v])
        .collect();
    Ok(cross.into_iter().combinations(k - 1).filter(move |edges| {
        let mut sets = DisjointSets::new(k);
        edges.iter().all(|&(u, v)| sets.union(owner[u], owner[v]))
    }))
}

/// `owner[v]` is the 0-based component of vertex `v` under consecutive
/// labeling (index 0 unused).
pub fn component_owner(sizes: &Composition) -> Vec<usize> {
    let mut owner = vec![usize::MAX];
    for (i, &a) in sizes.parts().iter().enumerate() {
        owner.extend(std::iter::repeat_n(i, a));
    }
    owner
}

/// Every valid degree sequence on `n >= 2` vertices, lexicographically.
pub fn enumerate_degree_sequences(n: usize) -> Result<impl Iterator<Item = DegreeSequence>> {
    if n < 2 {
        return Err(Error::OutOfRange(format!(
            "degree sequences need n >= 2, got {n}"
        )));
    }
    Ok(enumerate_compositions(2 * n - 2, n, false)?.map(|c| {
        DegreeSequence::new(c.parts().to_vec()).expect("composition of 2n-2 into n parts")
    }))
}
