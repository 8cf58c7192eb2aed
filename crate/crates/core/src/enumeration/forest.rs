//! Forests obtained from a tree by deleting a vertex or a set of edges.
//!
//! Components keep the original vertex labels; nothing is relabeled.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::{Composition, DisjointSets, Edge, LabeledTree};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Component {
    /// Sorted vertex labels.
    pub vertices: Vec<usize>,
    /// Induced tree edges, canonical order.
    pub edges: Vec<Edge>,
}

impl Component {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Whether `edges` is a spanning tree of `vertices`.
    pub fn is_tree(&self) -> bool {
        if self.vertices.is_empty() || self.edges.len() + 1 != self.vertices.len() {
            return false;
        }
        let Some(&max) = self.vertices.last() else {
            return false;
        };
        let mut sets = DisjointSets::new(max + 1);
        self.edges.iter().all(|&(u, v)| {
            self.vertices.binary_search(&u).is_ok()
                && self.vertices.binary_search(&v).is_ok()
                && sets.union(u, v)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Forest {
    pub n: usize,
    /// Set when the forest came from deleting a vertex.
    pub removed_vertex: Option<usize>,
    /// Ordered by smallest vertex.
    pub components: Vec<Component>,
    /// Deleted edges, canonical order. For a vertex split these are the
    /// edges incident to the deleted vertex.
    pub removed_edges: Vec<Edge>,
}

impl Forest {
    /// Component sizes, in component order.
    pub fn sizes(&self) -> Result<Composition> {
        Composition::positive(self.components.iter().map(Component::len).collect())
    }

    /// Puts the removed edges back.
    pub fn reassemble(&self) -> Result<LabeledTree> {
        let mut edges: Vec<Edge> = self
            .components
            .iter()
            .flat_map(|c| c.edges.iter().copied())
            .collect();
        edges.extend_from_slice(&self.removed_edges);
        LabeledTree::canonicalize(self.n, &edges)
    }
}

/// Deletes `v` and its incident edges. The result has `deg(v)` components
/// whose sizes sum to `n - 1`.
pub fn split_by_root_removal(tree: &LabeledTree, v: usize) -> Result<Forest> {
    tree.check_vertex(v)?;
    if tree.n() < 2 {
        return Err(Error::OutOfRange("vertex removal needs n >= 2".into()));
    }
    let (removed, kept): (Vec<Edge>, Vec<Edge>) =
        tree.edges().iter().partition(|&&(a, b)| a == v || b == v);
    let components = components_of(tree.n(), &kept, Some(v));
    Ok(Forest {
        n: tree.n(),
        removed_vertex: Some(v),
        components,
        removed_edges: removed,
    })
}

/// Deletes the edges in `cut`, leaving `|cut| + 1` components.
pub fn split_by_edge_removal(tree: &LabeledTree, cut: &[Edge]) -> Result<Forest> {
    let mut removed: Vec<Edge> = cut.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    removed.sort_unstable();
    if let Some(w) = removed.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateEdge(w[0].0, w[0].1));
    }
    if let Some(&(u, v)) = removed.iter().find(|&&(u, v)| !tree.contains_edge(u, v)) {
        return Err(Error::EdgeNotInTree(u, v));
    }
    let kept: Vec<Edge> = tree
        .edges()
        .iter()
        .copied()
        .filter(|e| removed.binary_search(e).is_err())
        .collect();
    let components = components_of(tree.n(), &kept, None);
    Ok(Forest {
        n: tree.n(),
        removed_vertex: None,
        components,
        removed_edges: removed,
    })
}

fn components_of(n: usize, edges: &[Edge], skip: Option<usize>) -> Vec<Component> {
    let mut sets = DisjointSets::new(n + 1);
    for &(u, v) in edges {
        sets.union(u, v);
    }
    // Roots are the smallest label of each set, so grouping by root in
    // increasing vertex order yields components ordered by smallest vertex.
    let mut slot = vec![usize::MAX; n + 1];
    let mut components: Vec<Component> = Vec::new();
    for v in (1..=n).filter(|&v| Some(v) != skip) {
        let r = sets.find(v);
        if slot[r] == usize::MAX {
            slot[r] = components.len();
            components.push(Component {
                vertices: Vec::new(),
                edges: Vec::new(),
            });
        }
        components[slot[r]].vertices.push(v);
    }
    for &(u, v) in edges {
        let r = sets.find(u);
        components[slot[r]].edges.push((u, v));
    }
    components
}
