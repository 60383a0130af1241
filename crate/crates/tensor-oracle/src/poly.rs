//! Exact multivariate polynomials over ℚ in the variables x¹, …, x^d.
//!
//! A monomial is its exponent vector (length d); a polynomial maps monomials to
//! nonzero rational coefficients. All arithmetic is exact; zero coefficients are
//! pruned eagerly so that structural equality is semantic equality.

use graph_core::Coefficient;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Exponent vector over x¹..x^d, one entry per variable.
pub type Monomial = Vec<usize>;

/// A polynomial with rational coefficients; `terms` never holds zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    d: usize,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl Poly {
    /// The zero polynomial in d variables.
    pub fn zero(d: usize) -> Self {
        Poly { d, terms: BTreeMap::new() }
    }

    /// The constant polynomial `c`.
    pub fn constant(d: usize, c: Coefficient) -> Self {
        let mut p = Poly::zero(d);
        p.add_term(vec![0; d], c);
        p
    }

    /// The single-term polynomial `c · x^exp`.
    pub fn monomial(d: usize, exp: Monomial, c: Coefficient) -> Self {
        assert_eq!(exp.len(), d, "exponent vector length must equal d");
        let mut p = Poly::zero(d);
        p.add_term(exp, c);
        p
    }

    /// Number of variables.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates (monomial, coefficient) pairs in deterministic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    /// Adds `c · x^exp` in place, pruning a cancelled term.
    pub fn add_term(&mut self, exp: Monomial, c: Coefficient) {
        debug_assert_eq!(exp.len(), self.d);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp.clone()).or_insert_with(Coefficient::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.d, other.d);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly { d: self.d, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }

    pub fn scale(&self, c: &Coefficient) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.d);
        }
        Poly { d: self.d, terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.d, other.d);
        let mut out = Poly::zero(self.d);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let exp: Monomial = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }

    /// Partial derivative ∂/∂x^v (v is 0-based).
    pub fn partial(&self, v: usize) -> Poly {
        assert!(v < self.d);
        let mut out = Poly::zero(self.d);
        for (e, c) in self.terms() {
            if e[v] == 0 {
                continue;
            }
            let mut exp = e.clone();
            exp[v] -= 1;
            out.add_term(exp, c * Coefficient::from_integer(e[v].into()));
        }
        out
    }

    /// Total degree of every monomial if they all agree; `None` for the zero
    /// polynomial; `Err(degrees)` listing the distinct degrees otherwise.
    pub fn homogeneous_degree(&self) -> Result<Option<usize>, Vec<usize>> {
        let mut degs: Vec<usize> = self.terms.keys().map(|e| e.iter().sum()).collect();
        degs.sort_unstable();
        degs.dedup();
        match degs.len() {
            0 => Ok(None),
            1 => Ok(Some(degs[0])),
            _ => Err(degs),
        }
    }
}
