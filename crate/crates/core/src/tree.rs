//! Domain types: labeled trees, degree sequences, compositions and Prüfer
//! sequences.

use serde::Serialize;

use crate::error::{Error, Result};

/// Undirected edge, stored as `(min, max)`.
pub type Edge = (usize, usize);

/// Tree on the vertices `1..=n`, kept as a sorted list of `(min, max)` edges.
///
/// Two trees are equal iff their edge sets are equal; the shape alone does not
/// matter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LabeledTree {
    n: usize,
    edges: Vec<Edge>,
}

impl LabeledTree {
    /// Validates `raw_edges` as a spanning tree on `1..=n` and normalizes it.
    pub fn canonicalize(n: usize, raw_edges: &[Edge]) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("a tree needs at least one vertex".into()));
        }
        let mut edges = Vec::with_capacity(raw_edges.len());
        for &(u, v) in raw_edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::BadVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::NotATree(format!("self-loop at {u}")));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} edges on {n} vertices, expected {}",
                edges.len(),
                n - 1
            )));
        }
        // n - 1 edges and no cycle implies connected.
        let mut sets = DisjointSets::new(n + 1);
        for &(u, v) in &edges {
            if !sets.union(u, v) {
                return Err(Error::NotATree(format!("edge ({u}, {v}) closes a cycle")));
            }
        }
        Ok(Self { n, edges })
    }

    /// Caller guarantees `edges` is already a canonical spanning tree.
    pub(crate) fn from_canonical(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(edges.len() + 1, n);
        Self { n, edges }
    }

    pub fn single_vertex() -> Self {
        Self {
            n: 1,
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn degree_of(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self
            .edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count())
    }

    /// Degrees of vertices `1..=n`, index 0 is vertex 1.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u - 1] += 1;
            deg[v - 1] += 1;
        }
        deg
    }

    /// Neighbour lists indexed by vertex label (index 0 unused).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Bitmask over the edges of the complete graph, one bit per edge in
    /// lexicographic order. `None` when `n > 16`.
    pub fn edge_mask(&self) -> Option<u128> {
        if self.n > 16 {
            return None;
        }
        let n = self.n;
        let index = |u: usize, v: usize| {
            // edges (1,2),(1,3),...,(1,n),(2,3),...
            let before: usize = (1..u).map(|i| n - i).sum();
            before + (v - u - 1)
        };
        Some(
            self.edges
                .iter()
                .fold(0u128, |m, &(u, v)| m | (1u128 << index(u, v))),
        )
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::BadVertex {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }
}

/// Union-find over `0..len`.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(len: usize) -> Self {
        Self {
            parent: (0..len).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Positive degrees `d_1..d_n` with `n >= 2` and `Σ d_i = 2n - 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        let n = degrees.len();
        if n < 2 {
            return Err(Error::InvalidDegreeSequence(format!(
                "need at least 2 vertices, got {n}"
            )));
        }
        if let Some(i) = degrees.iter().position(|&d| d == 0) {
            return Err(Error::InvalidDegreeSequence(format!(
                "vertex {} has degree 0",
                i + 1
            )));
        }
        let sum: usize = degrees.iter().sum();
        if sum != 2 * n - 2 {
            return Err(Error::InvalidDegreeSequence(format!(
                "degrees sum to {sum}, expected {}",
                2 * n - 2
            )));
        }
        Ok(Self(degrees))
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    /// The Prüfer symbols of any tree with these degrees, sorted: vertex `i`
    /// repeated `d_i - 1` times.
    pub fn prufer_multiset(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &d)| std::iter::repeat_n(i + 1, d - 1))
            .collect()
    }
}

/// Ordered tuple of parts with a fixed sum.
///
/// The positive variant (every part `>= 1`) holds subtree sizes; the
/// nonnegative variant holds multinomial exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Composition {
    parts: Vec<usize>,
    target_sum: usize,
    allow_zero: bool,
}

impl Composition {
    /// Positive composition of `Σ parts`.
    pub fn positive(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::OutOfRange(
                "a composition needs at least one part".into(),
            ));
        }
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::OutOfRange(format!("part {} is zero", i + 1)));
        }
        let target_sum = parts.iter().sum();
        Ok(Self {
            parts,
            target_sum,
            allow_zero: false,
        })
    }

    /// Nonnegative composition of `Σ parts`.
    pub fn nonnegative(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::OutOfRange(
                "a composition needs at least one part".into(),
            ));
        }
        let target_sum = parts.iter().sum();
        Ok(Self {
            parts,
            target_sum,
            allow_zero: true,
        })
    }

    /// Positive composition that must sum to `target`.
    pub fn positive_of(parts: Vec<usize>, target: usize) -> Result<Self> {
        let c = Self::positive(parts)?;
        c.expect_sum(target)?;
        Ok(c)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>, allow_zero: bool) -> Self {
        let target_sum = parts.iter().sum();
        Self {
            parts,
            target_sum,
            allow_zero,
        }
    }

    pub fn expect_sum(&self, target: usize) -> Result<()> {
        if self.target_sum == target {
            Ok(())
        } else {
            Err(Error::CompositionSumMismatch {
                expected: target,
                got: self.target_sum,
            })
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn target_sum(&self) -> usize {
        self.target_sum
    }

    pub fn allows_zero(&self) -> bool {
        self.allow_zero
    }
}

/// Prüfer word of a tree on `n` vertices: `n - 2` symbols in `1..=n`.
/// Empty for `n = 2`, and by convention for `n = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PruferSequence {
    n: usize,
    symbols: Vec<usize>,
}

impl PruferSequence {
    pub fn new(n: usize, symbols: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("n must be at least 1".into()));
        }
        let expected = n.saturating_sub(2);
        if symbols.len() != expected {
            return Err(Error::OutOfRange(format!(
                "Prüfer sequence for n = {n} has length {expected}, got {}",
                symbols.len()
            )));
        }
        if let Some(&s) = symbols.iter().find(|&&s| s == 0 || s > n) {
            return Err(Error::BadVertex { vertex: s, n });
        }
        Ok(Self { n, symbols })
    }

    pub(crate) fn from_parts_unchecked(n: usize, symbols: Vec<usize>) -> Self {
        Self { n, symbols }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn occurrences(&self, v: usize) -> usize {
        self.symbols.iter().filter(|&&s| s == v).count()
    }
}
