//! Prüfer codec. Leaves are always removed smallest label first.

use crate::error::{Error, Result};
use crate::tree::{Edge, LabeledTree, PruferSequence};

pub fn prufer_encode(tree: &LabeledTree) -> Result<PruferSequence> {
    let n = tree.n();
    if n < 2 {
        return Err(Error::OutOfRange(format!(
            "Prüfer encoding needs n >= 2, got {n}"
        )));
    }
    let adj = tree.adjacency();

    // Parent pointers with the tree rooted at n; n itself is never removed.
    let mut parent = vec![0usize; n + 1];
    let mut stack = vec![n];
    let mut seen = vec![false; n + 1];
    seen[n] = true;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                stack.push(w);
            }
        }
    }

    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut symbols = Vec::with_capacity(n - 2);
    let mut ptr = (1..=n)
        .find(|&v| degree[v] == 1)
        .expect("a tree has a leaf");
    let mut leaf = ptr;
    for _ in 0..n.saturating_sub(2) {
        let next = parent[leaf];
        symbols.push(next);
        degree[next] -= 1;
        if degree[next] == 1 && next < ptr {
            leaf = next;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    Ok(PruferSequence::from_parts_unchecked(n, symbols))
}

pub fn prufer_decode(seq: &PruferSequence) -> LabeledTree {
    decode_symbols(seq.n(), seq.symbols())
}

/// Decodes a symbol slice already known to be a valid word for `n`.
pub(crate) fn decode_symbols(n: usize, symbols: &[usize]) -> LabeledTree {
    if n == 1 {
        return LabeledTree::single_vertex();
    }
    let mut degree = vec![1usize; n + 1];
    for &s in symbols {
        degree[s] += 1;
    }
    let mut edges: Vec<Edge> = Vec::with_capacity(n - 1);
    let mut ptr = (1..=n)
        .find(|&v| degree[v] == 1)
        .expect("some vertex is absent");
    let mut leaf = ptr;
    for &v in symbols {
        edges.push((leaf.min(v), leaf.max(v)));
        degree[leaf] = 0;
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n));
    edges.sort_unstable();
    LabeledTree::from_canonical(n, edges)
}

/// All words of length `n - 2` over `1..=n`, in lexicographic order.
#[derive(Debug, Clone)]
pub struct PruferWords {
    n: usize,
    next: Option<Vec<usize>>,
}

impl PruferWords {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            n,
            next: Some(vec![1; n.saturating_sub(2)]),
        }
    }

    /// Borrowing variant of `next`, avoiding a clone per word.
    pub(crate) fn advance(&mut self) -> Option<&[usize]> {
        let word = self.next.as_mut()?;
        // odometer step
        let mut i = word.len();
        loop {
            if i == 0 {
                self.next = None;
                return None;
            }
            i -= 1;
            if word[i] < self.n {
                word[i] += 1;
                for w in &mut word[i + 1..] {
                    *w = 1;
                }
                break;
            }
        }
        self.next.as_deref()
    }
}

impl Iterator for PruferWords {
    type Item = PruferSequence;

    fn next(&mut self) -> Option<PruferSequence> {
        let current = self.next.clone()?;
        self.advance();
        Some(PruferSequence::from_parts_unchecked(self.n, current))
    }
}
