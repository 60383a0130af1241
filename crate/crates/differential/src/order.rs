//! Vertex classes, order words, symbols, and the reduction coefficient.
//!
//! Vertex types are ranked in five classes, written left to right from greatest to
//! smallest:
//!
//! ```text
//!   (0,ℓ) ℓ≥2   >   (f,ℓ) ℓ>f≥1   >   (1,1)   >   (0,1)   >   (0,0)
//! ```
//!
//! with (0,ℓ) ≥ (0,ℓ′) iff ℓ ≥ ℓ′ and (f,ℓ) ≥ (f′,ℓ′) iff ℓ > ℓ′ or (ℓ = ℓ′ and
//! f ≥ f′). Types outside these classes (f ≥ ℓ other than (1,1), or ℓ = 0 < f) only
//! occur without the ascending restriction; they sort below (0,0) in a sixth segment
//! so that every word remains comparable.
//!
//! The order of a graph is the word of its vertex classes in vertex position; the
//! order of a sum is the lexicographic maximum over its terms. For a symmetric sum
//! the maximum is automatically weakly decreasing, which is what the segment
//! boundaries k₀ ≤ k₁ ≤ k₂ ≤ k₃ and the reduction coefficient
//!
//! ```text
//!   a = (−1)^{ℓ₁+⋯+ℓ_{k₂−1}} ( Σ_{class 1} ℓᵢ + Σ_{class 2} (ℓᵢ − fᵢ) )
//! ```
//!
//! require.

use std::cmp::Ordering;

use graph_core::{coeff_int, AerialGraph, Coefficient, GraphSum, VertexType};
use num_traits::Zero;
use thiserror::Error;

/// Errors from order-word operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderError {
    #[error("order words have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("operation requires a weakly decreasing order word")]
    NotSorted,
    #[error("the empty sum has no order")]
    EmptySum,
}

/// The class of one vertex type in the five-segment ranking (plus the extension
/// segment for types that the ascending rule excludes).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VClass {
    /// (0,ℓ) with ℓ ≥ 2.
    PureSource { l: usize },
    /// (f,ℓ) with ℓ > f ≥ 1.
    MixedFlow { f: usize, l: usize },
    /// (1,1).
    Simple,
    /// (0,1).
    SingleSource,
    /// (0,0).
    Isolated,
    /// Everything else: f ≥ ℓ with (f,ℓ) ≠ (1,1), including ℓ = 0 < f.
    NonAscending { f: usize, l: usize },
}

impl VClass {
    /// Classifies a vertex type.
    pub fn of(t: VertexType) -> VClass {
        match (t.f, t.l) {
            (0, 0) => VClass::Isolated,
            (0, 1) => VClass::SingleSource,
            (1, 1) => VClass::Simple,
            (0, l) => VClass::PureSource { l },
            (f, l) if f < l => VClass::MixedFlow { f, l },
            (f, l) => VClass::NonAscending { f, l },
        }
    }

    /// Comparison key: greater key = greater class.
    fn key(&self) -> (u8, usize, usize) {
        match *self {
            VClass::PureSource { l } => (5, l, 0),
            VClass::MixedFlow { f, l } => (4, l, f),
            VClass::Simple => (3, 0, 0),
            VClass::SingleSource => (2, 0, 0),
            VClass::Isolated => (1, 0, 0),
            VClass::NonAscending { f, l } => (0, l, f),
        }
    }

    /// The out-degree ℓ of the classified type.
    pub fn l(&self) -> usize {
        match *self {
            VClass::PureSource { l } => l,
            VClass::MixedFlow { l, .. } => l,
            VClass::Simple | VClass::SingleSource => 1,
            VClass::Isolated => 0,
            VClass::NonAscending { l, .. } => l,
        }
    }

    /// The in-degree f of the classified type.
    pub fn f(&self) -> usize {
        match *self {
            VClass::PureSource { .. } | VClass::SingleSource | VClass::Isolated => 0,
            VClass::MixedFlow { f, .. } => f,
            VClass::Simple => 1,
            VClass::NonAscending { f, .. } => f,
        }
    }
}

impl Ord for VClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for VClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for VClass {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(fm, "({},{})", self.f(), self.l())
    }
}

/// The word of vertex classes of a graph, in vertex position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderWord {
    word: Vec<VClass>,
}

/// 1-based segment start positions of a weakly decreasing order word:
/// class 2 starts at k₀, class 3 at k₁, class 4 at k₂, class 5 at k₃.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Boundaries {
    pub k0: usize,
    pub k1: usize,
    pub k2: usize,
    pub k3: usize,
}

impl OrderWord {
    /// Builds a word from explicit classes.
    pub fn new(word: Vec<VClass>) -> OrderWord {
        OrderWord { word }
    }

    /// The classes in vertex position.
    pub fn word(&self) -> &[VClass] {
        &self.word
    }

    /// Word length = vertex count.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    /// Whether the word is empty.
    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Whether the classes weakly decrease left to right.
    pub fn is_sorted(&self) -> bool {
        self.word.windows(2).all(|w| w[0] >= w[1])
    }

    /// The weakly decreasing rearrangement.
    pub fn sorted(&self) -> OrderWord {
        let mut word = self.word.clone();
        word.sort_by(|a, b| b.cmp(a));
        OrderWord { word }
    }
}

impl std::fmt::Display for OrderWord {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.word {
            write!(fm, "{c}")?;
        }
        Ok(())
    }
}

/// The order word of a graph: per-vertex classes in vertex position.
pub fn graph_order(g: &AerialGraph) -> OrderWord {
    OrderWord { word: g.vertex_types().into_iter().map(VClass::of).collect() }
}

/// Lexicographic comparison of equal-length words.
pub fn compare_orders(a: &OrderWord, b: &OrderWord) -> Result<Ordering, OrderError> {
    if a.len() != b.len() {
        return Err(OrderError::LengthMismatch(a.len(), b.len()));
    }
    Ok(a.word.cmp(&b.word))
}

/// The order of a sum: the maximal order word among terms with nonzero coefficient.
/// `None` on the empty sum. For a symmetric sum the maximum is weakly decreasing.
pub fn sum_order(delta: &GraphSum) -> Option<OrderWord> {
    delta.iter().map(|(g, _)| graph_order(g)).max_by(|a, b| a.word.cmp(&b.word))
}

/// The symbol: the restriction of δ to its maximal-order terms.
pub fn symbol(delta: &GraphSum) -> Result<GraphSum, OrderError> {
    let top = sum_order(delta).ok_or(OrderError::EmptySum)?;
    let mut out = GraphSum::empty(delta.n());
    for (g, c) in delta.iter() {
        if graph_order(g) == top {
            out.add_canonical(g.clone(), c.clone());
        }
    }
    Ok(out)
}

/// Segment boundaries of a weakly decreasing word.
pub fn boundaries(word: &OrderWord) -> Result<Boundaries, OrderError> {
    if !word.is_sorted() {
        return Err(OrderError::NotSorted);
    }
    let count = |pred: &dyn Fn(&VClass) -> bool| word.word.iter().filter(|c| pred(c)).count();
    let c1 = count(&|c| matches!(c, VClass::PureSource { .. }));
    let c2 = count(&|c| matches!(c, VClass::MixedFlow { .. }));
    let c3 = count(&|c| matches!(c, VClass::Simple));
    let c4 = count(&|c| matches!(c, VClass::SingleSource));
    let k0 = 1 + c1;
    let k1 = k0 + c2;
    let k2 = k1 + c3;
    let k3 = k2 + c4;
    Ok(Boundaries { k0, k1, k2, k3 })
}

/// The reduction coefficient a = (−1)^{ℓ₁+⋯+ℓ_{k₂−1}} (Σ_{class1} ℓ + Σ_{class2} (ℓ−f))
/// of a weakly decreasing word; zero exactly when no class-1/2 vertex exists.
pub fn a_coefficient(word: &OrderWord) -> Result<Coefficient, OrderError> {
    let b = boundaries(word)?;
    let mut magnitude: i64 = 0;
    let mut exponent: usize = 0;
    for (idx, c) in word.word.iter().enumerate() {
        let pos = idx + 1;
        if pos < b.k2 {
            exponent += c.l();
        }
        match c {
            VClass::PureSource { l } => magnitude += *l as i64,
            VClass::MixedFlow { f, l } => magnitude += (*l - *f) as i64,
            _ => {}
        }
    }
    let mut a = coeff_int(magnitude);
    if exponent % 2 == 1 && !a.is_zero() {
        a = -a;
    }
    Ok(a)
}

/// Inserts one (1,1) class into a weakly decreasing word: the order bound reached by
/// one splitting step.
pub fn oplus_simple(word: &OrderWord) -> Result<OrderWord, OrderError> {
    if !word.is_sorted() {
        return Err(OrderError::NotSorted);
    }
    let mut w = word.word.clone();
    let pos = w.partition_point(|c| *c >= VClass::Simple);
    w.insert(pos, VClass::Simple);
    Ok(OrderWord { word: w })
}
