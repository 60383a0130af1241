//! The graph coboundary and its reduction machinery.
//!
//! The coboundary ∂ acts on linear combinations of aerial graphs by *vertex
//! splitting*: every graph Δ on n vertices contributes, for each pair of labels
//! 0 ≤ i < j ≤ n, all graphs obtained by renumbering the vertices over
//! {0, …, n} \ {j}, splitting the vertex labeled i into two vertices i, j joined by a
//! new arrow (in either orientation), and distributing the old incident arrows over
//! the two halves. Only splittings that *contract properly* (each new endpoint meets
//! more than one arrow, or the pair is an isolated arrow) survive, the two new
//! vertices must be admissible under the active type policy, and each term carries
//! the graded sign
//!
//! ```text
//! ε_{j,i}^{r,t} = (−1)^{q_j(q_0+⋯+q_{j−1})} (−1)^{(q_j−1)(q_0+⋯+q_{i−1})} (−1)^{t−1},
//! ε_{i,j}^{r,s} = (−1)^{p_j(p_0+⋯+p_{j−1})} (−1)^{(p_j−1)(p_0+⋯+p_{i−1})} (−1)^{s−1} (−1)^{p_i p_j},
//! ```
//!
//! with q, p the out-degrees of the split graph and an overall leading minus on ∂.
//!
//! On top of ∂ the crate provides the vertex-order machinery (class words, symbols,
//! the a-coefficient), the contracting homotopy h that deletes the largest-index
//! (1,1) vertex, wheel cocycles, and the iterative reduction of a cocycle to one
//! with a simple symbol.

mod homotopy;
mod order;
mod reduce;
mod split;
mod wheels;

pub use homotopy::{homotopy, homotopy_sum};
pub use order::{
    a_coefficient, boundaries, compare_orders, graph_order, oplus_simple, sum_order, symbol,
    Boundaries, OrderError, OrderWord, VClass,
};
pub use reduce::{reduce_to_simple, reduce_unchecked, ReduceError, Reduction};
pub use split::{
    coboundary, coboundary_graph, contracts_properly, renumber_with_gap, splittings,
    splittings_described, GapGraph, Orientation, SplitDescriptor,
};
pub use wheels::{cycle_graph, wheel, wheel_product, WheelError};
