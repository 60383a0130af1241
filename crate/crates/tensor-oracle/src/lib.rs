//! Exact symbolic polyvector fields with polynomial coefficients, the
//! Schouten-bracket calculus on them, and the evaluation of graph-defined
//! multidifferential cochains — an independent oracle for the combinatorial
//! coboundary: graph-level images must agree with the graded Chevalley
//! differential applied at the tensor level.
//!
//! All arithmetic is exact (arbitrary-precision rationals); evaluation results
//! are polyvector fields compared coefficient by coefficient.

mod graphops;
mod poly;
mod polyvector;

pub use graphops::{
    antisym_trace, b_gamma, chevalley_coboundary_eval, cochain_eval, legs_sign, wheel_trace_eval,
    LeggedGraph, RatMatrix,
};
pub use poly::{Monomial, Poly};
pub use polyvector::{
    graded_signature, is_ascending_tensor, nabla, q_bracket, random_ascending_tensor, schouten,
    PolyVector,
};

/// Errors raised by polyvector arithmetic and cochain evaluation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("dimension mismatch: expected d = {expected}, got d = {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cannot add polyvectors of orders {left} and {right}")]
    OrderClash { left: usize, right: usize },
    #[error("coefficients are not homogeneous polynomials of one degree")]
    NonHomogeneous,
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("argument for vertex {vertex} must have order {expected}, got {got}")]
    OrderMismatch { vertex: usize, expected: usize, got: usize },
    #[error("wheel trace arguments must all share one order k >= 1")]
    UnequalOrders,
    #[error("bad matrix input: {0}")]
    BadMatrix(String),
    #[error("bad input: {0}")]
    BadInput(String),
}
