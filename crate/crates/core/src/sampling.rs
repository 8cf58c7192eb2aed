//! Seeded uniform sampling of labeled trees.
//!
//! The generator is ChaCha8 (`rand_chacha` 0.3) seeded through
//! `SeedableRng::seed_from_u64`; ranges are drawn as `u64` so the stream does
//! not depend on the platform's pointer width. Same seed, same parameters,
//! same trees.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumeration::prufer_decode;
use crate::error::{Error, Result};
use crate::tree::{DegreeSequence, LabeledTree, PruferSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplerConfig {
    pub seed: u64,
    /// Number of trees the stream yields.
    pub count: usize,
}

/// Uniform over all `n^(n-2)` trees: `n - 2` independent uniform symbols,
/// decoded.
pub fn sample_uniform_tree(n: usize, cfg: SamplerConfig) -> Result<UniformTrees> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    Ok(UniformTrees {
        n,
        remaining: cfg.count,
        rng: ChaCha8Rng::seed_from_u64(cfg.seed),
    })
}

#[derive(Debug, Clone)]
pub struct UniformTrees {
    n: usize,
    remaining: usize,
    rng: ChaCha8Rng,
}

impl Iterator for UniformTrees {
    type Item = LabeledTree;

    fn next(&mut self) -> Option<LabeledTree> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let n = self.n as u64;
        let symbols = (0..self.n.saturating_sub(2))
            .map(|_| self.rng.gen_range(1..=n) as usize)
            .collect();
        Some(prufer_decode(&PruferSequence::from_parts_unchecked(
            self.n, symbols,
        )))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

/// Uniform over the trees with degree vector `d`: a uniform shuffle of the
/// Prüfer multiset, decoded. Every distinct arrangement is equally likely and
/// each decodes to a different tree.
pub fn sample_tree_with_degrees(d: &DegreeSequence, cfg: SamplerConfig) -> DegreeSampler {
    DegreeSampler {
        n: d.len(),
        symbols: d.prufer_multiset(),
        remaining: cfg.count,
        rng: ChaCha8Rng::seed_from_u64(cfg.seed),
    }
}

#[derive(Debug, Clone)]
pub struct DegreeSampler {
    n: usize,
    symbols: Vec<usize>,
    remaining: usize,
    rng: ChaCha8Rng,
}

impl Iterator for DegreeSampler {
    type Item = LabeledTree;

    fn next(&mut self) -> Option<LabeledTree> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        self.symbols.shuffle(&mut self.rng);
        let word = PruferSequence::from_parts_unchecked(self.n, self.symbols.clone());
        Some(prufer_decode(&word))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}
