//! Exact computation of harmonic cycles on unicyclized graphs.
//!
//! A unicyclization is a connected multigraph `G` together with an integer
//! matrix `∂` whose columns act as 2-cell boundaries and leave a first
//! homology of rank one. The crate enumerates spanning trees and cycletrees,
//! evaluates winding numbers as determinants over a fundamental cycle basis,
//! and assembles the standard harmonic cycle
//!
//! ```text
//! λ = Σ_{Y cycletree} w(z_Y) · z_Y
//! ```
//!
//! All arithmetic is done over arbitrary-precision integers and rationals.
//! The [`oracle`] module re-derives the structural identities by brute force
//! on small instances.

pub mod complex;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod oracle;
pub mod spanning;
pub mod unicycle;

pub use complex::{Chain, ChainComplex, HomologyGroup};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeKind, EdgeRelabeling, Multigraph};
pub use linalg::{IntMatrix, RatVector, SmithDecomposition};
pub use spanning::{CycleBasis, Cycletree, SpanningTree, DEFAULT_EDGE_CAP};
pub use unicycle::{Contraction, Deletion, Reconstruction, Unicyclization};
