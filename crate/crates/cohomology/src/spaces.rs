//! Coboundary matrices, cohomology dimensions, and cocycle/coboundary membership.
//!
//! Matrices of ∂ are expressed over labeled-graph rows: one row per canonical
//! labeled graph occurring in any coboundary image. This stays exact even when an
//! image fails to lie in the symmetrized span of the next slice, which happens
//! without the ascending restriction (∂ is relabeling-equivariant only on the
//! typed complexes).

use std::collections::BTreeMap;

use differential::coboundary;
use graph_core::{AerialGraph, GraphSum, TypePolicy};
use num_traits::Zero;
use ratlinalg::SparseRationalMatrix;

use crate::basis::{enumerate_basis, BasisSlice, Mode};
use crate::CohomologyError;

/// The matrix of ∂ₙ on a slice, over labeled-graph rows, together with the row
/// index of each labeled graph in the image supports.
fn labeled_matrix(
    source: &BasisSlice,
    policy: TypePolicy,
) -> Result<(SparseRationalMatrix, BTreeMap<AerialGraph, usize>), CohomologyError> {
    let images: Vec<GraphSum> =
        source.reps().iter().map(|rep| coboundary(rep, policy)).collect();
    let mut row_of: BTreeMap<AerialGraph, usize> = BTreeMap::new();
    for image in &images {
        for (graph, _) in image.iter() {
            let next = row_of.len();
            row_of.entry(graph.clone()).or_insert(next);
        }
    }
    let mut m = SparseRationalMatrix::zero(row_of.len().max(1), source.dim());
    for (c, image) in images.iter().enumerate() {
        for (graph, x) in image.iter() {
            m.set(row_of[graph], c, x.clone())?;
        }
    }
    Ok((m, row_of))
}

/// The matrix of ∂ₙ: column c holds coboundary(rep_c) over labeled-graph rows.
pub fn differential_matrix(
    n: usize,
    policy: TypePolicy,
    mode: Mode,
) -> Result<SparseRationalMatrix, CohomologyError> {
    let source = enumerate_basis(n, policy, mode)?;
    Ok(labeled_matrix(&source, policy)?.0)
}

/// One row of the Betti table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiRow {
    pub n: usize,
    /// Dimension of the slice at n.
    pub dim: usize,
    /// Rank of ∂ arriving from the slice at n−1 (zero at n = 1).
    pub rank_in: usize,
    /// Rank of ∂ leaving toward the slice at n+1.
    pub rank_out: usize,
    /// dim ker ∂ₙ − rank ∂ₙ₋₁. Negative values can occur only for policies that do
    /// not form a complex (∂∘∂ ≠ 0 without the type restriction), where the
    /// incoming image need not lie inside the kernel and no quotient is defined.
    pub betti: i64,
}

/// dim Hⁿ = dim ker ∂ₙ − rank ∂ₙ₋₁, with no incoming image at n = 1.
pub fn cohomology_dim(
    n: usize,
    policy: TypePolicy,
    mode: Mode,
) -> Result<i64, CohomologyError> {
    Ok(betti_table(n, policy, mode)?.pop().expect("table has a row per n").betti)
}

/// The Betti table for n = 1..=nmax.
pub fn betti_table(
    nmax: usize,
    policy: TypePolicy,
    mode: Mode,
) -> Result<Vec<BettiRow>, CohomologyError> {
    assert!(nmax >= 1);
    let mut rows = Vec::new();
    let mut rank_in = 0usize;
    for n in 1..=nmax {
        let source = enumerate_basis(n, policy, mode)?;
        let m = labeled_matrix(&source, policy)?.0;
        let rank_out = m.rank();
        let kernel = (source.dim() - rank_out) as i64;
        rows.push(BettiRow { n, dim: source.dim(), rank_in, rank_out, betti: kernel - rank_in as i64 });
        rank_in = rank_out;
    }
    Ok(rows)
}

/// Whether ∂δ = 0.
pub fn is_cocycle(delta: &GraphSum, policy: TypePolicy) -> bool {
    coboundary(delta, policy).is_empty()
}

/// A β with ∂β = δ, if one exists in the symmetrized slice below δ's.
pub fn coboundary_witness(
    delta: &GraphSum,
    policy: TypePolicy,
    mode: Mode,
) -> Result<Option<GraphSum>, CohomologyError> {
    let n = delta.n();
    if delta.is_empty() {
        return Ok(Some(GraphSum::empty(n.saturating_sub(1))));
    }
    if n < 2 {
        return Ok(None);
    }
    let source = enumerate_basis(n - 1, policy, mode)?;
    let (m, row_of) = labeled_matrix(&source, policy)?;
    let mut b = vec![graph_core::Coefficient::zero(); m.rows()];
    for (graph, x) in delta.iter() {
        match row_of.get(graph) {
            Some(&r) => b[r] = x.clone(),
            // Support outside every image: not a coboundary of this slice.
            None => return Ok(None),
        }
    }
    match m.solve(&b)? {
        Some(x) => Ok(Some(source.reconstruct(&x)?)),
        None => Ok(None),
    }
}
