//! The contraction homotopy h.
//!
//! h contracts the single outgoing arrow of i₀, the largest-index vertex of type
//! (1,1), merging i₀ into the arrow's target a: the one arrow c → i₀ entering i₀ is
//! re-aimed to c → a in place, i₀ is removed, and the remaining vertices keep their
//! relative numbering. Graphs with no (1,1) vertex map to zero. When the arrow at i₀
//! is a self-loop the vertex is a lone one-cycle component (its single incoming arrow
//! is the loop itself); for n = 1 there is no merge target and h is zero, for n > 1
//! the component is erased and the rest of the graph survives.

use graph_core::{AerialGraph, GraphSum, Sign};

/// h on one graph: the contracted graph on n−1 vertices and its sign, or `None` when
/// the result is zero (no (1,1) vertex, the lone-loop case at n = 1, or a repeated
/// arrow created by the re-aiming).
pub fn homotopy(g: &AerialGraph) -> Option<(AerialGraph, Sign)> {
    let n = g.n();
    let i0 = (0..n).rev().find(|&v| {
        let t = g.vertex_type(v);
        t.f == 1 && t.l == 1
    })?;
    let a = g.deb_of(i0)[0];

    let mut deb: Vec<Vec<usize>> = Vec::with_capacity(n - 1);
    if a == i0 {
        // Lone one-cycle component: erase it (the in-arrow is the loop itself).
        if n == 1 {
            return None;
        }
        for v in 0..n {
            if v != i0 {
                deb.push(g.deb_of(v).to_vec());
            }
        }
    } else {
        for v in 0..n {
            if v != i0 {
                deb.push(g.deb_of(v).iter().map(|&t| if t == i0 { a } else { t }).collect());
            }
        }
    }
    // Order-preserving relabel (graded sign +1): drop the gap left by i₀.
    for list in &mut deb {
        for t in list.iter_mut() {
            if *t > i0 {
                *t -= 1;
            }
        }
    }
    let contracted = AerialGraph::new(deb).expect("contraction keeps targets in range");
    let (canon, sign, zero) = contracted.arrow_canonicalize();
    if zero {
        return None;
    }
    Some((canon, sign))
}

/// h applied termwise to a sum; the result lives on n−1 vertices.
pub fn homotopy_sum(delta: &GraphSum) -> GraphSum {
    let n = delta.n();
    let mut out = GraphSum::empty(n.saturating_sub(1));
    for (g, c) in delta.iter() {
        if let Some((h, sign)) = homotopy(g) {
            let coeff = if sign == 1 { c.clone() } else { -c.clone() };
            out.add_canonical(h, coeff);
        }
    }
    out
}
