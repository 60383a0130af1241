//! Exact rational linear combinations of aerial graphs.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::graph::{AerialGraph, GraphError, Sign};
use crate::perm::permutations;
use crate::Coefficient;

/// A formal ℚ-linear combination of arrow-canonical aerial graphs with a common
/// vertex count. Terms with coefficient zero are never stored, and every key is
/// arrow-canonical, so structural equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSum {
    n: usize,
    terms: BTreeMap<AerialGraph, Coefficient>,
}

impl GraphSum {
    /// The zero sum on graphs with `n` vertices.
    pub fn empty(n: usize) -> Self {
        GraphSum { n, terms: BTreeMap::new() }
    }

    /// A single graph with coefficient 1 (canonicalized; zero if an arrow repeats).
    pub fn from_graph(g: AerialGraph) -> Self {
        let mut s = GraphSum::empty(g.n());
        s.add_graph(g, Coefficient::from_integer(1.into()));
        s
    }

    /// Common vertex count of all terms.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True when the sum is zero.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates terms in the deterministic serialization order.
    pub fn iter(&self) -> impl Iterator<Item = (&AerialGraph, &Coefficient)> {
        self.terms.iter()
    }

    /// Coefficient of an arrow-canonical graph (zero if absent).
    pub fn coeff_of(&self, g: &AerialGraph) -> Coefficient {
        self.terms.get(g).cloned().unwrap_or_else(Coefficient::zero)
    }

    /// Adds `coeff · g`, arrow-canonicalizing `g` first (the sorting sign multiplies
    /// the coefficient; a repeated arrow contributes nothing).
    pub fn add_graph(&mut self, g: AerialGraph, coeff: Coefficient) {
        debug_assert_eq!(g.n(), self.n, "vertex count mismatch in GraphSum");
        if coeff.is_zero() {
            return;
        }
        let (canon, sign, zero) = g.arrow_canonicalize();
        if zero {
            return;
        }
        self.add_canonical(canon, apply_sign(coeff, sign));
    }

    /// Adds `coeff · g` for a graph already known to be arrow-canonical.
    pub fn add_canonical(&mut self, g: AerialGraph, coeff: Coefficient) {
        debug_assert_eq!(g.n(), self.n, "vertex count mismatch in GraphSum");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(g);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds another sum into this one. Errors when vertex counts differ.
    pub fn add_assign(&mut self, other: &GraphSum) -> Result<(), GraphError> {
        if other.n != self.n {
            return Err(GraphError::MixedVertexCount { expected: self.n, got: other.n });
        }
        for (g, c) in &other.terms {
            self.add_canonical(g.clone(), c.clone());
        }
        Ok(())
    }

    /// The difference `self − other`. Errors when vertex counts differ.
    pub fn sub(&self, other: &GraphSum) -> Result<GraphSum, GraphError> {
        let mut out = self.clone();
        out.add_assign(&other.scaled(&-Coefficient::from_integer(1.into())))?;
        Ok(out)
    }

    /// The sum scaled by a rational factor.
    pub fn scaled(&self, factor: &Coefficient) -> GraphSum {
        if factor.is_zero() {
            return GraphSum::empty(self.n);
        }
        GraphSum {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(g, c)| (g.clone(), c * factor))
                .collect(),
        }
    }
}

/// Multiplies a coefficient by a ±1 sign.
pub(crate) fn apply_sign(c: Coefficient, sign: Sign) -> Coefficient {
    match sign {
        1 => c,
        -1 => -c,
        other => unreachable!("sign must be ±1, got {other}"),
    }
}

/// Symmetrization S(g) = Σ_{π ∈ Sₙ} sign(π) · π(g), where sign(π) is the graded
/// vertex-permutation sign and each relabeled graph is arrow-canonicalized.
///
/// Graphs whose relabeling orbit carries an odd stabilizer element symmetrize to zero
/// (e.g. the 2-cycle and every even wheel); the result can therefore be empty.
pub fn symmetrize(g: &AerialGraph) -> GraphSum {
    let n = g.n();
    let mut sum = GraphSum::empty(n);
    for p in permutations(n) {
        let (rg, sign) = g
            .relabel(&p)
            .expect("permutations(n) yields valid bijections");
        sum.add_graph(rg, apply_sign(Coefficient::from_integer(1.into()), sign));
    }
    sum
}

/// Linear extension of [`symmetrize`] to sums.
pub fn symmetrize_sum(s: &GraphSum) -> GraphSum {
    let mut out = GraphSum::empty(s.n());
    for (g, c) in s.iter() {
        let sg = symmetrize(g);
        out.add_assign(&sg.scaled(c)).expect("same n by construction");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff_int;

    fn g(deb: &[&[usize]]) -> AerialGraph {
        AerialGraph::new(deb.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut s = GraphSum::empty(2);
        s.add_graph(g(&[&[1], &[]]), coeff_int(2));
        s.add_graph(g(&[&[1], &[]]), coeff_int(-2));
        assert!(s.is_empty());
    }

    #[test]
    fn canonicalization_merges_reordered_arrows() {
        let mut s = GraphSum::empty(3);
        s.add_graph(g(&[&[1, 2], &[], &[]]), coeff_int(1));
        s.add_graph(g(&[&[2, 1], &[], &[]]), coeff_int(1));
        // The second form carries sign −1, so the terms cancel.
        assert!(s.is_empty());
    }

    #[test]
    fn symmetrize_point_is_itself() {
        let s = symmetrize(&AerialGraph::empty(1));
        assert_eq!(s.len(), 1);
        assert_eq!(s.coeff_of(&AerialGraph::empty(1)), coeff_int(1));
    }

    #[test]
    fn symmetrize_two_cycle_vanishes() {
        // Swapping the two (1,1) vertices fixes the 2-cycle with sign −1.
        let s = symmetrize(&g(&[&[1], &[0]]));
        assert!(s.is_empty());
    }

    #[test]
    fn symmetrize_two_points_doubles() {
        let s = symmetrize(&AerialGraph::empty(2));
        assert_eq!(s.len(), 1);
        assert_eq!(s.coeff_of(&AerialGraph::empty(2)), coeff_int(2));
    }

    #[test]
    fn symmetrize_three_wheel() {
        // S(Δ) = 3Δ − 3Δ' for the simple 3-wheel Δ = (0→1, 1→2, 2→0).
        let delta = g(&[&[1], &[2], &[0]]);
        let delta_rev = g(&[&[2], &[0], &[1]]);
        let s = symmetrize(&delta);
        assert_eq!(s.len(), 2);
        assert_eq!(s.coeff_of(&delta), coeff_int(3));
        assert_eq!(s.coeff_of(&delta_rev), coeff_int(-3));
    }

    #[test]
    fn symmetrize_loop_plus_point() {
        // S(loop ⊔ point) = (loop, point) + (point, loop); both vertices even/odd mix
        // gives sign +1 on the swap (ℓ = (1, 0)).
        let s = symmetrize(&g(&[&[0], &[]]));
        assert_eq!(s.len(), 2);
        assert_eq!(s.coeff_of(&g(&[&[0], &[]])), coeff_int(1));
        assert_eq!(s.coeff_of(&g(&[&[], &[1]])), coeff_int(1));
    }

    #[test]
    fn mixed_vertex_count_rejected() {
        let mut s = GraphSum::empty(2);
        let other = GraphSum::from_graph(AerialGraph::empty(3));
        assert!(s.add_assign(&other).is_err());
    }
}
