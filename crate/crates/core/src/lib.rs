//! Reconstruction of permutations from patterns distorted by transposition
//! errors.
//!
//! Permutations are vertices of a Cayley graph on `Sym_n` whose generators
//! are transpositions: all of them ([`GeneratorKind::AllTranspositions`]),
//! adjacent swaps (bubble-sort graph) or swaps with the first position (star
//! graph). An unknown permutation can be recovered from any `N(Γ, r) + 1`
//! distinct vertices of its radius-`r` ball, where `N(Γ, r)` is the largest
//! intersection of two distinct balls. This crate computes those numbers by
//! exhaustive search, evaluates the known closed forms and bounds, and runs
//! the reconstruction itself.

pub mod cache;
pub mod cayley;
pub mod closed_forms;
pub mod cycle_type;
mod error;
pub mod factorization;
pub mod generators;
pub mod graph;
pub mod perm;
pub mod probe;
pub mod reconstruct;
pub mod report;
pub mod small_graph;
pub mod verify;
pub mod visited;

pub use cayley::{CayleyGraph, Limits, MetricBall};
pub use cycle_type::CycleType;
pub use error::{Error, Result};
pub use generators::{GeneratorKind, GeneratorSet};
pub use perm::{min_transposition_distance, Permutation, Transposition};
pub use report::GraphReport;
pub use small_graph::SmallGraph;
