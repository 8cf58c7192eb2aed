//! Exact counting, exhaustive enumeration and uniform sampling of labeled
//! trees, with a verifier that checks every counting identity of the
//! degree-of-vertex-1 decomposition against brute force.
//!
//! Vertices are labeled `1..=n` throughout.

pub mod arith;
pub mod counting;
pub mod enumeration;
pub mod error;
pub mod sampling;
pub mod text;
pub mod tree;
pub mod verifier;

pub use arith::{ExactCount, ExactRational};
pub use error::{Error, Result};
pub use tree::{Composition, DegreeSequence, Edge, LabeledTree, PruferSequence};
