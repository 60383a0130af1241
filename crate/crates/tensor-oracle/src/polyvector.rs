//! Antisymmetric contravariant tensor fields (polyvector fields) with polynomial
//! coefficients, stored in the wedge basis.
//!
//! A p-vector is kept as a map from strictly increasing index p-tuples to
//! polynomials: α = Σ_{i₁<⋯<i_p} s^{i₁…i_p} ∂_{i₁}∧⋯∧∂_{i_p}. The component
//! function used by the summation formulas is the antisymmetric extension divided
//! by p!, so that α = Σ over *all* index tuples of component·∂∧⋯∧∂. All signs are
//! routed through one sorting routine (`sort_with_sign`).

use crate::poly::{Monomial, Poly};
use crate::TensorError;
use graph_core::{coeff_from_str, coeff_to_string, Coefficient};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Sorts `idx` ascending; returns `None` on a repeated index (wedge collapse),
/// otherwise the permutation sign of the sort.
pub(crate) fn sort_with_sign(idx: &mut [usize]) -> Option<i64> {
    let mut sign = 1i64;
    for i in 1..idx.len() {
        let mut k = i;
        while k > 0 && idx[k - 1] > idx[k] {
            idx.swap(k - 1, k);
            sign = -sign;
            k -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// Parity sign of a permutation given as the reordered sequence of its domain.
pub(crate) fn perm_sign(seq: &[usize]) -> i64 {
    let mut sign = 1i64;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// p! as an exact rational.
fn factorial(p: usize) -> Coefficient {
    let mut f = Coefficient::one();
    for k in 2..=p {
        f *= Coefficient::from_integer(k.into());
    }
    f
}

/// A polyvector field: order-p antisymmetric tensor with polynomial coefficients.
///
/// Keys are strictly increasing 0-based index tuples of length p; values are
/// nonzero polynomials. Two zero polyvectors compare equal regardless of their
/// nominal order, so homogeneous arithmetic can treat "zero" uniformly.
#[derive(Debug, Clone)]
pub struct PolyVector {
    d: usize,
    p: usize,
    comps: BTreeMap<Vec<usize>, Poly>,
}

impl PartialEq for PolyVector {
    fn eq(&self, other: &Self) -> bool {
        if self.is_zero() && other.is_zero() {
            return true;
        }
        self.d == other.d && self.p == other.p && self.comps == other.comps
    }
}

impl Eq for PolyVector {}

impl PolyVector {
    /// The zero p-vector on ℝ^d.
    pub fn zero(d: usize, p: usize) -> Self {
        PolyVector { d, p, comps: BTreeMap::new() }
    }

    /// An order-0 polyvector holding one polynomial.
    pub fn scalar(d: usize, poly: Poly) -> Self {
        let mut v = PolyVector::zero(d, 0);
        v.add_wedge_term(&[], poly);
        v
    }

    /// Ambient dimension d.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Tensor order p (the grading |α|; deg α = p − 1).
    pub fn order(&self) -> usize {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Iterates (increasing key, polynomial) pairs in deterministic order.
    pub fn comps(&self) -> impl Iterator<Item = (&Vec<usize>, &Poly)> {
        self.comps.iter()
    }

    /// Adds `poly · ∂_{idx₁}∧⋯∧∂_{idx_p}` where `idx` need not be sorted;
    /// repeated indices contribute nothing.
    pub fn add_wedge_term(&mut self, idx: &[usize], poly: Poly) {
        debug_assert_eq!(idx.len(), self.p);
        debug_assert!(idx.iter().all(|&i| i < self.d));
        if poly.is_zero() {
            return;
        }
        let mut key = idx.to_vec();
        let Some(sign) = sort_with_sign(&mut key) else { return };
        let signed = if sign < 0 { poly.neg() } else { poly };
        match self.comps.get_mut(&key) {
            Some(existing) => {
                let sum = existing.add(&signed);
                if sum.is_zero() {
                    self.comps.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.comps.insert(key, signed);
            }
        }
    }

    /// The stored polynomial on a strictly increasing key, if present.
    pub fn stored(&self, key: &[usize]) -> Option<&Poly> {
        self.comps.get(key)
    }

    /// The component function α^{i₁…i_p} of the summation formulas: the
    /// antisymmetric extension of the stored coefficients divided by p!.
    pub fn component(&self, idx: &[usize]) -> Poly {
        debug_assert_eq!(idx.len(), self.p);
        let mut key = idx.to_vec();
        let Some(sign) = sort_with_sign(&mut key) else { return Poly::zero(self.d) };
        match self.comps.get(&key) {
            None => Poly::zero(self.d),
            Some(s) => {
                let mut c = Coefficient::one() / factorial(self.p);
                if sign < 0 {
                    c = -c;
                }
                s.scale(&c)
            }
        }
    }

    /// Sum; a zero operand is absorbed whatever its nominal order.
    pub fn add(&self, other: &PolyVector) -> Result<PolyVector, TensorError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.d != other.d {
            return Err(TensorError::DimensionMismatch { expected: self.d, got: other.d });
        }
        if self.p != other.p {
            return Err(TensorError::OrderClash { left: self.p, right: other.p });
        }
        let mut out = self.clone();
        for (k, poly) in other.comps() {
            out.add_wedge_term(k, poly.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyVector) -> Result<PolyVector, TensorError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyVector {
        PolyVector {
            d: self.d,
            p: self.p,
            comps: self.comps.iter().map(|(k, s)| (k.clone(), s.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> PolyVector {
        if c.is_zero() {
            return PolyVector::zero(self.d, self.p);
        }
        PolyVector {
            d: self.d,
            p: self.p,
            comps: self.comps.iter().map(|(k, s)| (k.clone(), s.scale(c))).collect(),
        }
    }

    /// Wedge product; orders add, coefficient polynomials multiply.
    pub fn wedge(&self, other: &PolyVector) -> Result<PolyVector, TensorError> {
        if self.d != other.d {
            return Err(TensorError::DimensionMismatch { expected: self.d, got: other.d });
        }
        let mut out = PolyVector::zero(self.d, self.p + other.p);
        for (ka, sa) in self.comps() {
            for (kb, sb) in other.comps() {
                let poly = sa.mul(sb);
                if poly.is_zero() {
                    continue;
                }
                let mut idx = ka.clone();
                idx.extend_from_slice(kb);
                out.add_wedge_term(&idx, poly);
            }
        }
        Ok(out)
    }

    /// Serializes to the interchange form (1-based wedge indices).
    pub fn to_json(&self) -> serde_json::Value {
        let comps: Vec<CompJson> = self
            .comps
            .iter()
            .map(|(k, poly)| CompJson {
                idx: k.iter().map(|i| i + 1).collect(),
                poly: poly
                    .terms()
                    .map(|(e, c)| TermJson { exp: e.clone(), coeff: coeff_to_string(c) })
                    .collect(),
            })
            .collect();
        serde_json::to_value(PolyVectorJson { d: self.d, p: self.p, comps }).unwrap()
    }

    /// Parses the interchange form produced by [`PolyVector::to_json`].
    pub fn from_json(v: &serde_json::Value) -> Result<PolyVector, TensorError> {
        let raw: PolyVectorJson =
            serde_json::from_value(v.clone()).map_err(|e| TensorError::BadInput(e.to_string()))?;
        let mut out = PolyVector::zero(raw.d, raw.p);
        for comp in raw.comps {
            if comp.idx.len() != raw.p {
                return Err(TensorError::BadInput(format!(
                    "index tuple {:?} does not have length p = {}",
                    comp.idx, raw.p
                )));
            }
            let mut idx = Vec::with_capacity(comp.idx.len());
            for i in comp.idx {
                if i == 0 || i > raw.d {
                    return Err(TensorError::BadInput(format!(
                        "wedge index {i} outside 1..={}",
                        raw.d
                    )));
                }
                idx.push(i - 1);
            }
            let mut poly = Poly::zero(raw.d);
            for term in comp.poly {
                if term.exp.len() != raw.d {
                    return Err(TensorError::BadInput(format!(
                        "exponent vector {:?} does not have length d = {}",
                        term.exp, raw.d
                    )));
                }
                let c = coeff_from_str(&term.coeff)
                    .map_err(|e| TensorError::BadInput(e.to_string()))?;
                poly.add_term(term.exp, c);
            }
            out.add_wedge_term(&idx, poly);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Monomial,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct CompJson {
    idx: Vec<usize>,
    poly: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct PolyVectorJson {
    d: usize,
    p: usize,
    comps: Vec<CompJson>,
}

/// (−1)^e as a rational, from a parity exponent.
pub(crate) fn parity_sign(e: usize) -> Coefficient {
    if e.is_multiple_of(2) {
        Coefficient::one()
    } else {
        -Coefficient::one()
    }
}

/// The operator ∇_αβ = Σ_r (−1)^{r−1} α^{i₁…i_k} (∂_{i_r}β^{j…})
/// ∂_{i₁}∧⋯(omit i_r)⋯∧∂_{j…}, an order k+ℓ−1 polyvector.
///
/// Implemented factorial-free over the stored wedge coefficients: the 1/k! and
/// 1/ℓ! of the component functions cancel the sums over tuple orderings exactly.
pub fn nabla(alpha: &PolyVector, beta: &PolyVector) -> Result<PolyVector, TensorError> {
    if alpha.d() != beta.d() {
        return Err(TensorError::DimensionMismatch { expected: alpha.d(), got: beta.d() });
    }
    let (k, l) = (alpha.order(), beta.order());
    if k == 0 || alpha.is_zero() || beta.is_zero() {
        return Ok(PolyVector::zero(alpha.d(), 0));
    }
    let mut out = PolyVector::zero(alpha.d(), k + l - 1);
    for (ka, sa) in alpha.comps() {
        for (r, &a) in ka.iter().enumerate() {
            for (kb, sb) in beta.comps() {
                let poly = sa.mul(&sb.partial(a));
                if poly.is_zero() {
                    continue;
                }
                let mut idx: Vec<usize> = ka
                    .iter()
                    .enumerate()
                    .filter(|&(pos, _)| pos != r)
                    .map(|(_, &i)| i)
                    .collect();
                idx.extend_from_slice(kb);
                let signed = if r % 2 == 1 { poly.neg() } else { poly };
                out.add_wedge_term(&idx, signed);
            }
        }
    }
    Ok(out)
}

/// The Schouten bracket
/// [α,β]_S = (−1)^{deg α} ∇_αβ − (−1)^{(deg α+1)·deg β} ∇_βα, with deg = order − 1.
pub fn schouten(alpha: &PolyVector, beta: &PolyVector) -> Result<PolyVector, TensorError> {
    let first = nabla(alpha, beta)?.scale(&parity_sign(alpha.order() + 1));
    let second = nabla(beta, alpha)?.scale(&parity_sign(alpha.order() * (beta.order() + 1)));
    first.sub(&second)
}

/// The |·|-symmetric operation Q(α,β) = (−1)^{deg α}[α,β]_S.
pub fn q_bracket(alpha: &PolyVector, beta: &PolyVector) -> Result<PolyVector, TensorError> {
    Ok(schouten(alpha, beta)?.scale(&parity_sign(alpha.order() + 1)))
}

/// Whether α is an ascending tensor: coefficients homogeneous of degree q with
/// q < p when p > 1 and q ≤ p when p ≤ 1. The zero tensor qualifies. Errors on
/// non-homogeneous coefficients, for which the type is undefined.
pub fn is_ascending_tensor(alpha: &PolyVector) -> Result<bool, TensorError> {
    let mut degrees: Vec<usize> = Vec::new();
    for (_, poly) in alpha.comps() {
        match poly.homogeneous_degree() {
            Ok(Some(q)) => degrees.push(q),
            Ok(None) => {}
            Err(_) => return Err(TensorError::NonHomogeneous),
        }
    }
    degrees.sort_unstable();
    degrees.dedup();
    match degrees.len() {
        0 => Ok(true),
        1 => {
            let q = degrees[0];
            let p = alpha.order();
            Ok(if p > 1 { q < p } else { q <= p })
        }
        _ => Err(TensorError::NonHomogeneous),
    }
}

/// Koszul sign of the graded permutation sending (0,…,n) to `seq`, on symbols of
/// parities `orders`: one factor (−1)^{orders[a]·orders[b]} per inverted pair.
pub fn graded_signature(orders: &[usize], seq: &[usize]) -> i64 {
    debug_assert_eq!(orders.len(), seq.len());
    let mut sign = 1i64;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] && orders[seq[i]] % 2 == 1 && orders[seq[j]] % 2 == 1 {
                sign = -sign;
            }
        }
    }
    sign
}

/// Enumerates the exponent vectors of total degree `q` in `d` variables.
fn monomials_of_degree(d: usize, q: usize) -> Vec<Monomial> {
    if d == 0 {
        return if q == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=q {
        for mut rest in monomials_of_degree(d - 1, q - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Enumerates the strictly increasing p-tuples over 0..d.
fn increasing_tuples(d: usize, p: usize) -> Vec<Vec<usize>> {
    if p == 0 {
        return vec![vec![]];
    }
    if p > d {
        return vec![];
    }
    let mut out = Vec::new();
    let mut tuple: Vec<usize> = (0..p).collect();
    loop {
        out.push(tuple.clone());
        // Advance to the next combination in lexicographic order.
        let mut i = p;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if tuple[i] < d - (p - i) {
                tuple[i] += 1;
                for j in i + 1..p {
                    tuple[j] = tuple[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// A seeded random ascending p-tensor on ℝ^d: homogeneous coefficient degree q
/// drawn admissibly (q < p if p > 1, else q ≤ p) and capped by `maxq`, with small
/// integer coefficients. Deterministic in `seed`, and never the zero tensor when
/// p ≤ d.
pub fn random_ascending_tensor(d: usize, p: usize, maxq: usize, seed: u64) -> PolyVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let qbound = if p > 1 { p - 1 } else { p };
    let qmax = qbound.min(maxq);
    let q = rng.gen_range(0..=qmax);
    let mut out = PolyVector::zero(d, p);
    let keys = increasing_tuples(d, p);
    let monos = monomials_of_degree(d, q);
    for key in &keys {
        let mut poly = Poly::zero(d);
        for m in &monos {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                poly.add_term(m.clone(), Coefficient::from_integer(c.into()));
            }
        }
        if !poly.is_zero() {
            out.add_wedge_term(key, poly);
        }
    }
    if out.is_zero() && !keys.is_empty() {
        out.add_wedge_term(&keys[0], Poly::monomial(d, monos[0].clone(), Coefficient::one()));
    }
    out
}
