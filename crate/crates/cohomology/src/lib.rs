//! Basis enumeration and cohomology of the symmetric graph complex.
//!
//! The n-th cochain space is spanned by the nonzero graded symmetrizations S(Δ) of
//! admissible graphs on n vertices, one representative per relabeling orbit. The
//! coboundary matrices between consecutive slices give dim Hⁿ = dim ker ∂ₙ − rank ∂ₙ₋₁.
//!
//! Under the ascending policy the arrow-balance identity Σℓᵢ = Σfᵢ forces every
//! vertex into type (1,1) or (0,0): admissible graphs are exactly disjoint unions of
//! simple cycles plus isolated vertices, so the slice is enumerated directly from
//! partial permutations. Isolated vertices are kept or excluded per [`Mode`]; both
//! modes are closed under ∂ (splitting never creates an isolated vertex).

mod basis;
mod spaces;

pub use basis::{enumerate_basis, BasisSlice, Mode};
pub use spaces::{
    betti_table, coboundary_witness, cohomology_dim, differential_matrix, is_cocycle, BettiRow,
};

use thiserror::Error;

/// Errors from basis and cohomology computations.
#[derive(Debug, Error)]
pub enum CohomologyError {
    #[error("sum is not in the span of the basis slice (offending orbit of {0:?})")]
    NotInSpan(Vec<Vec<usize>>),
    #[error("slice for n = {0} is too large to enumerate with the given cap")]
    SliceTooLarge(usize),
    #[error(transparent)]
    Graph(#[from] graph_core::GraphError),
    #[error(transparent)]
    LinAlg(#[from] ratlinalg::LinAlgError),
}
