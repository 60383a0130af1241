//! Aerial graphs with ordered arrow lists and graded relabeling signs.
//!
//! An *aerial graph* on n vertices is a sequence of ordered arrow-target lists
//! Deb(1), …, Deb(n): vertex i carries ℓᵢ = |Deb(i)| outgoing arrows, written as an
//! ordered list of targets, and receives fᵢ incoming arrows. The pair (fᵢ, ℓᵢ) is the
//! *type* of vertex i. Coefficients attached to graphs are antisymmetric under arrow
//! reordering — permuting a Deb list multiplies by the permutation sign, so a repeated
//! target kills the graph — and vertices are graded by their out-degrees: transposing
//! vertices i < j costs
//!
//! ```text
//! (−1)^{ℓᵢℓⱼ + (ℓᵢ+ℓⱼ)(ℓ_{i+1} + ⋯ + ℓ_{j−1})}.
//! ```
//!
//! This crate provides the graph type, arrow canonicalization, graded relabeling,
//! symmetrization over Sₙ, transposition, admissibility policies (ascending (f ≤ ℓ),
//! descending (f ≥ ℓ), unrestricted), exact rational linear combinations of graphs,
//! and a stable JSON interchange format.
//!
//! Vertex indices are 0-based throughout the Rust API; the JSON format is 1-based.

mod graph;
mod json;
mod perm;
mod sum;

pub use graph::{
    transposition_sign, AerialGraph, GraphError, Sign, TypePolicy, VertexType,
};
pub use json::{coeff_from_str, coeff_to_string};
pub use perm::permutations;
pub use sum::{symmetrize, symmetrize_sum, GraphSum};

/// Exact rational coefficient used everywhere in the complex.
pub type Coefficient = num_rational::BigRational;

/// Shorthand for an integer-valued [`Coefficient`].
pub fn coeff_int(k: i64) -> Coefficient {
    Coefficient::from_integer(k.into())
}
