//! The aerial graph type, vertex typing, and graded label operations.

use thiserror::Error;

/// Multiplicative sign, always ±1.
pub type Sign = i32;

/// Errors from graph construction and label operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    /// An arrow target is outside the vertex range.
    #[error("vertex {vertex} has arrow target {target} outside 0..{n}")]
    TargetOutOfRange { vertex: usize, target: usize, n: usize },
    /// A permutation was not a bijection on 0..n.
    #[error("relabeling map is not a permutation of 0..{n}")]
    NotAPermutation { n: usize },
    /// Two sums or graphs with different vertex counts were combined.
    #[error("vertex count mismatch: expected n = {expected}, got n = {got}")]
    MixedVertexCount { expected: usize, got: usize },
    /// A rational coefficient string did not parse.
    #[error("invalid rational coefficient {0:?}")]
    BadCoefficient(String),
    /// Malformed JSON payload.
    #[error("JSON error: {0}")]
    Json(String),
}

/// The type (f, ℓ) of a vertex: f incoming arrows, ℓ outgoing arrows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexType {
    /// Number of incoming arrows.
    pub f: usize,
    /// Number of outgoing arrows.
    pub l: usize,
}

/// Admissibility policy for vertex types.
///
/// * `Ascending`: f < ℓ when ℓ > 1, and f ≤ ℓ when ℓ ≤ 1 (type (f ≤ ℓ)).
/// * `Descending`: f > ℓ when f > 1, and f ≥ ℓ when f ≤ 1 (type (f ≥ ℓ), the
///   transpose of `Ascending`).
/// * `Unrestricted`: every type is admissible; `max_out` only caps enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypePolicy {
    Ascending,
    Descending,
    Unrestricted {
        /// Out-degree cap used when enumerating graphs (not an admissibility test).
        max_out: usize,
    },
}

impl TypePolicy {
    /// Whether a vertex of the given type is admissible under this policy.
    pub fn admits(&self, t: VertexType) -> bool {
        match self {
            TypePolicy::Ascending => {
                if t.l > 1 {
                    t.f < t.l
                } else {
                    t.f <= t.l
                }
            }
            TypePolicy::Descending => {
                if t.f > 1 {
                    t.f > t.l
                } else {
                    t.f >= t.l
                }
            }
            TypePolicy::Unrestricted { .. } => true,
        }
    }
}

/// An aerial graph: vertex i (0-based) owns the ordered target list `deb[i]`.
///
/// The derived lexicographic order on `deb` is the serialization order used for
/// canonical orbit representatives and deterministic iteration.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AerialGraph {
    deb: Vec<Vec<usize>>,
}

impl AerialGraph {
    /// Builds a graph from 0-based target lists, validating the target range.
    pub fn new(deb: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = deb.len();
        for (v, list) in deb.iter().enumerate() {
            for &t in list {
                if t >= n {
                    return Err(GraphError::TargetOutOfRange { vertex: v, target: t, n });
                }
            }
        }
        Ok(AerialGraph { deb })
    }

    /// The graph with n vertices and no arrows.
    pub fn empty(n: usize) -> Self {
        AerialGraph { deb: vec![Vec::new(); n] }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.deb.len()
    }

    /// Total number of arrows Σᵢ ℓᵢ.
    pub fn arrow_count(&self) -> usize {
        self.deb.iter().map(Vec::len).sum()
    }

    /// The target lists, 0-based.
    pub fn deb(&self) -> &[Vec<usize>] {
        &self.deb
    }

    /// Ordered target list of vertex `v`.
    pub fn deb_of(&self, v: usize) -> &[usize] {
        &self.deb[v]
    }

    /// Out-degree sequence (ℓ₁, …, ℓₙ).
    pub fn out_degrees(&self) -> Vec<usize> {
        self.deb.iter().map(Vec::len).collect()
    }

    /// In-degree sequence (f₁, …, fₙ).
    pub fn in_degrees(&self) -> Vec<usize> {
        let mut f = vec![0usize; self.n()];
        for list in &self.deb {
            for &t in list {
                f[t] += 1;
            }
        }
        f
    }

    /// The type (f, ℓ) of vertex `v`.
    pub fn vertex_type(&self, v: usize) -> VertexType {
        let f = self.deb.iter().flatten().filter(|&&t| t == v).count();
        VertexType { f, l: self.deb[v].len() }
    }

    /// All vertex types, indexed by vertex.
    pub fn vertex_types(&self) -> Vec<VertexType> {
        let f = self.in_degrees();
        self.deb
            .iter()
            .zip(f)
            .map(|(list, f)| VertexType { f, l: list.len() })
            .collect()
    }

    /// Whether every vertex type is admissible under `policy`.
    pub fn is_admissible(&self, policy: TypePolicy) -> bool {
        self.vertex_types().into_iter().all(|t| policy.admits(t))
    }

    /// Sorts every target list ascending and returns `(canonical, sign, is_zero)`.
    ///
    /// The sign is the product of the sorting permutation signs (arrow antisymmetry);
    /// `is_zero` reports a repeated target inside some list, which kills the graph.
    pub fn arrow_canonicalize(&self) -> (AerialGraph, Sign, bool) {
        let mut sign: Sign = 1;
        let mut deb = Vec::with_capacity(self.n());
        let mut zero = false;
        for list in &self.deb {
            let mut l = list.clone();
            // Insertion sort; each adjacent swap is one arrow transposition.
            for i in 1..l.len() {
                let mut k = i;
                while k > 0 && l[k - 1] > l[k] {
                    l.swap(k - 1, k);
                    sign = -sign;
                    k -= 1;
                }
            }
            if l.windows(2).any(|w| w[0] == w[1]) {
                zero = true;
            }
            deb.push(l);
        }
        (AerialGraph { deb }, sign, zero)
    }

    /// Relabels vertices by `perm` (old label v ↦ new label `perm[v]`), renaming arrow
    /// targets accordingly, and returns the graph together with the graded sign of the
    /// vertex permutation. Target lists keep their original internal order.
    pub fn relabel(&self, perm: &[usize]) -> Result<(AerialGraph, Sign), GraphError> {
        let n = self.n();
        if perm.len() != n {
            return Err(GraphError::NotAPermutation { n });
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(GraphError::NotAPermutation { n });
            }
            seen[p] = true;
        }
        let mut deb = vec![Vec::new(); n];
        for v in 0..n {
            deb[perm[v]] = self.deb[v].iter().map(|&t| perm[t]).collect();
        }
        // Graded sign: bubble the old vertices, written in new-position order, back to
        // ascending order; each adjacent swap of vertices a, b costs (−1)^{ℓ_a ℓ_b}.
        let degrees = self.out_degrees();
        let mut seq: Vec<usize> = (0..n).collect();
        seq.sort_by_key(|&v| perm[v]);
        let mut sign: Sign = 1;
        for i in 1..n {
            let mut k = i;
            while k > 0 && seq[k - 1] > seq[k] {
                if (degrees[seq[k - 1]] * degrees[seq[k]]) % 2 == 1 {
                    sign = -sign;
                }
                seq.swap(k - 1, k);
                k -= 1;
            }
        }
        Ok((AerialGraph { deb }, sign))
    }

    /// Reverses every arrow. Target lists of the result are built in ascending source
    /// order (already arrow-canonical unless a reversed arrow repeats).
    pub fn transpose(&self) -> AerialGraph {
        let n = self.n();
        let mut deb = vec![Vec::new(); n];
        for u in 0..n {
            for &t in &self.deb[u] {
                deb[t].push(u);
            }
        }
        AerialGraph { deb }
    }
}

/// Graded sign of transposing vertices i < j in a graph with the given out-degree
/// sequence: (−1)^{ℓᵢℓⱼ + (ℓᵢ+ℓⱼ)(ℓ_{i+1} + ⋯ + ℓ_{j−1})}.
pub fn transposition_sign(out_degrees: &[usize], i: usize, j: usize) -> Sign {
    assert!(i < j && j < out_degrees.len(), "need i < j < n");
    let li = out_degrees[i];
    let lj = out_degrees[j];
    let mid: usize = out_degrees[i + 1..j].iter().sum();
    if (li * lj + (li + lj) * mid).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(deb: &[&[usize]]) -> AerialGraph {
        AerialGraph::new(deb.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    #[test]
    fn vertex_types_of_small_graph() {
        // Arrows 0→1, 0→2, 1→2 (1-based: 1→2, 1→3, 2→3).
        let graph = g(&[&[1, 2], &[2], &[]]);
        assert_eq!(graph.vertex_type(0), VertexType { f: 0, l: 2 });
        assert_eq!(graph.vertex_type(1), VertexType { f: 1, l: 1 });
        assert_eq!(graph.vertex_type(2), VertexType { f: 2, l: 0 });
        assert_eq!(graph.arrow_count(), 3);
    }

    #[test]
    fn ascending_policy_predicate() {
        let asc = TypePolicy::Ascending;
        assert!(asc.admits(VertexType { f: 0, l: 0 }));
        assert!(asc.admits(VertexType { f: 1, l: 1 }));
        assert!(asc.admits(VertexType { f: 0, l: 1 }));
        assert!(asc.admits(VertexType { f: 1, l: 2 }));
        assert!(!asc.admits(VertexType { f: 2, l: 2 }));
        assert!(!asc.admits(VertexType { f: 1, l: 0 }));
        assert!(!asc.admits(VertexType { f: 2, l: 1 }));
    }

    #[test]
    fn descending_is_transpose_of_ascending() {
        let desc = TypePolicy::Descending;
        let asc = TypePolicy::Ascending;
        for f in 0..5 {
            for l in 0..5 {
                assert_eq!(
                    desc.admits(VertexType { f, l }),
                    asc.admits(VertexType { f: l, l: f }),
                    "(f, l) = ({f}, {l})"
                );
            }
        }
    }

    #[test]
    fn canonicalize_sorts_and_signs() {
        let graph = g(&[&[2, 1], &[], &[]]);
        let (c, sign, zero) = graph.arrow_canonicalize();
        assert_eq!(c, g(&[&[1, 2], &[], &[]]));
        assert_eq!(sign, -1);
        assert!(!zero);
    }

    #[test]
    fn canonicalize_detects_repeated_arrow() {
        let graph = g(&[&[1, 1], &[]]);
        let (_, _, zero) = graph.arrow_canonicalize();
        assert!(zero);
    }

    #[test]
    fn transposition_sign_examples() {
        // Two (1,1) vertices: (−1)^{1·1} = −1.
        assert_eq!(transposition_sign(&[1, 1], 0, 1), -1);
        // ℓ = (2, 1, 1): swap 0,2 across a middle ℓ = 1: (−1)^{2·1 + 3·1} = −1.
        assert_eq!(transposition_sign(&[2, 1, 1], 0, 2), -1);
        // An even vertex transposes freely.
        assert_eq!(transposition_sign(&[2, 0, 2], 0, 2), 1);
    }

    #[test]
    fn relabel_identity_and_swap() {
        let graph = g(&[&[1], &[0]]);
        let (same, s) = graph.relabel(&[0, 1]).unwrap();
        assert_eq!(same, graph);
        assert_eq!(s, 1);
        // Swapping two (1,1) vertices of the 2-cycle gives the same graph, sign −1.
        let (swapped, s) = graph.relabel(&[1, 0]).unwrap();
        assert_eq!(swapped, graph);
        assert_eq!(s, -1);
    }

    #[test]
    fn relabel_composes_with_multiplicative_sign() {
        let graph = g(&[&[1, 2], &[2], &[]]);
        let p = [2, 0, 1];
        let q = [1, 2, 0];
        let (gp, sp) = graph.relabel(&p).unwrap();
        let (gpq, sq) = gp.relabel(&q).unwrap();
        let compose: Vec<usize> = (0..3).map(|v| q[p[v]]).collect();
        let (gc, sc) = graph.relabel(&compose).unwrap();
        assert_eq!(gpq, gc);
        assert_eq!(sp * sq, sc);
    }

    #[test]
    fn transpose_reverses_arrows() {
        let graph = g(&[&[1, 2], &[2], &[]]);
        let t = graph.transpose();
        assert_eq!(t, g(&[&[], &[0], &[0, 1]]));
        // The 2-cycle is its own transpose.
        let two = g(&[&[1], &[0]]);
        assert_eq!(two.transpose(), two);
    }

    #[test]
    fn rejects_out_of_range_target() {
        assert_eq!(
            AerialGraph::new(vec![vec![2]]),
            Err(GraphError::TargetOutOfRange { vertex: 0, target: 2, n: 1 })
        );
    }
}
