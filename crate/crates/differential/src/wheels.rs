//! Wheel cocycles: graded symmetrizations of simple cycles and their disjoint
//! products. Even-length wheels vanish (a cycle rotation is an odd graded symmetry);
//! the odd wheels R₁, R₃, R₅, … and their strictly increasing products represent the
//! cohomology of the ascending complex.

use graph_core::{symmetrize, AerialGraph, GraphSum};
use thiserror::Error;

/// Errors from wheel construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum WheelError {
    #[error("cycle length must be positive")]
    ZeroLength,
    #[error("wheel lengths must be odd (got {0})")]
    EvenLength(usize),
    #[error("wheel lengths must be strictly increasing")]
    NotIncreasing,
    #[error("at least one wheel length is required")]
    EmptyProduct,
}

/// The simple cycle Δ_k on k vertices: v → v+1 cyclically; k = 1 is the loop.
pub fn cycle_graph(k: usize) -> Result<AerialGraph, WheelError> {
    if k == 0 {
        return Err(WheelError::ZeroLength);
    }
    let deb = (0..k).map(|v| vec![(v + 1) % k]).collect();
    Ok(AerialGraph::new(deb).expect("cycle targets in range"))
}

/// The wheel R_k = S(Δ_k); the empty sum when k is even.
pub fn wheel(k: usize) -> Result<GraphSum, WheelError> {
    Ok(symmetrize(&cycle_graph(k)?))
}

/// The symmetrized disjoint union of cycles with strictly increasing odd lengths,
/// laid out on consecutive label blocks before symmetrizing. Repeated or even
/// lengths are rejected: they symmetrize to zero.
pub fn wheel_product(ks: &[usize]) -> Result<GraphSum, WheelError> {
    if ks.is_empty() {
        return Err(WheelError::EmptyProduct);
    }
    for &k in ks {
        if k == 0 {
            return Err(WheelError::ZeroLength);
        }
        if k % 2 == 0 {
            return Err(WheelError::EvenLength(k));
        }
    }
    if !ks.windows(2).all(|w| w[0] < w[1]) {
        return Err(WheelError::NotIncreasing);
    }
    let n: usize = ks.iter().sum();
    let mut deb = Vec::with_capacity(n);
    let mut base = 0;
    for &k in ks {
        for v in 0..k {
            deb.push(vec![base + (v + 1) % k]);
        }
        base += k;
    }
    let union = AerialGraph::new(deb).expect("block cycle targets in range");
    Ok(symmetrize(&union))
}
