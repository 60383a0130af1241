//! Reduction of cocycles to combinations with only simple-or-lower vertex classes.
//!
//! Given a symmetric cocycle δ, each step removes the maximal-order slice: with
//! σ the symbol of δ and a the reduction coefficient of O(δ), the correction
//! β₁ = −(1/a)·S(h(σ)) satisfies O(δ − ∂β₁) < O(δ). Iterating until a = 0 leaves a
//! combination whose order word contains no class-1/2 vertex, together with the
//! accumulated witness β (so that reduced = δ − ∂β exactly).

use graph_core::{symmetrize_sum, GraphError, GraphSum, TypePolicy};
use num_traits::Zero;
use thiserror::Error;

use crate::homotopy::homotopy_sum;
use crate::order::{a_coefficient, compare_orders, sum_order, symbol, OrderError, OrderWord};
use crate::split::coboundary;

/// Outcome of a reduction run.
#[derive(Debug, Clone)]
pub struct Reduction {
    /// δ − ∂β: the reduced combination, on the same vertex count as the input.
    pub reduced: GraphSum,
    /// The accumulated witness β, on one vertex fewer.
    pub witness: GraphSum,
    /// Number of correction steps performed.
    pub steps: usize,
    /// The strictly decreasing order words seen at the start of each step.
    pub orders: Vec<OrderWord>,
}

/// Errors from the reduction loop.
#[derive(Debug, Error)]
pub enum ReduceError {
    #[error("input is not a cocycle: its coboundary has {0} terms")]
    NotACocycle(usize),
    #[error("order failed to decrease strictly at step {step}")]
    OrderNotDecreasing { step: usize },
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Runs the reduction loop on a cocycle. Stops when the sum is empty or its order
/// word carries no class-1/2 vertex (reduction coefficient a = 0); errors when the
/// input is not a cocycle or an iteration fails to strictly decrease the order.
pub fn reduce_to_simple(delta: &GraphSum, policy: TypePolicy) -> Result<Reduction, ReduceError> {
    let boundary = coboundary(delta, policy);
    if !boundary.is_empty() {
        return Err(ReduceError::NotACocycle(boundary.len()));
    }
    reduce_unchecked(delta, policy)
}

/// The reduction loop with the input taken on trust: no cocycle precheck. The
/// returned triple still satisfies reduced = input − ∂(witness) exactly, and the
/// recorded orders decrease strictly, whether or not the input was closed. This is
/// the entry point for exploring combinations outside the ascending regime, where
/// closed sums with class-1/2 vertices need not exist at all.
pub fn reduce_unchecked(delta: &GraphSum, policy: TypePolicy) -> Result<Reduction, ReduceError> {
    let mut current = delta.clone();
    let mut witness = GraphSum::empty(delta.n().saturating_sub(1));
    let mut steps = 0;
    let mut orders = Vec::new();

    while let Some(word) = sum_order(&current) {
        let a = a_coefficient(&word)?;
        if a.is_zero() {
            break;
        }
        orders.push(word.clone());

        let sigma = symbol(&current)?;
        let beta1 = symmetrize_sum(&homotopy_sum(&sigma)).scaled(&(-a.recip()));
        current = current.sub(&coboundary(&beta1, policy))?;
        witness.add_assign(&beta1)?;
        steps += 1;

        if let Some(next) = sum_order(&current) {
            if compare_orders(&next, &word)? != std::cmp::Ordering::Less {
                return Err(ReduceError::OrderNotDecreasing { step: steps });
            }
        }
    }

    Ok(Reduction { reduced: current, witness, steps, orders })
}
