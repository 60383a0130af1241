//! JSON interchange for graphs and graph sums.
//!
//! Wire format (vertex indices are 1-based here, matching the written convention):
//!
//! ```json
//! {"n": 3, "deb": [[2, 3], [3], []]}
//! {"terms": [{"coeff": "3", "graph": {"n": 1, "deb": [[1]]}}]}
//! ```
//!
//! Coefficients are exact rationals rendered as `"p"` or `"p/q"` in lowest terms.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::graph::{AerialGraph, GraphError};
use crate::sum::GraphSum;
use crate::Coefficient;

/// Parses `"p"` or `"p/q"` into an exact rational.
pub fn coeff_from_str(s: &str) -> Result<Coefficient, GraphError> {
    let raw = s.trim();
    let (num, den) = match raw.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (raw, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| GraphError::BadCoefficient(s.to_string()))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| GraphError::BadCoefficient(s.to_string()))?;
    if d.is_zero() {
        return Err(GraphError::BadCoefficient(s.to_string()));
    }
    Ok(Coefficient::new(n, d))
}

/// Renders a rational as `"p"` (integer) or `"p/q"` in lowest terms with positive q.
pub fn coeff_to_string(c: &Coefficient) -> String {
    // BigRational is stored reduced with a positive denominator.
    debug_assert!(c.denom().is_positive());
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    deb: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    graph: GraphJson,
}

#[derive(Serialize, Deserialize)]
struct SumJson {
    terms: Vec<TermJson>,
}

impl AerialGraph {
    /// Serializes to the 1-based JSON wire format.
    pub fn to_json(&self) -> String {
        let j = GraphJson {
            n: self.n(),
            deb: self
                .deb()
                .iter()
                .map(|l| l.iter().map(|&t| t + 1).collect())
                .collect(),
        };
        serde_json::to_string(&j).expect("graph serialization cannot fail")
    }

    /// Parses the 1-based JSON wire format, validating dimensions and target ranges.
    pub fn from_json(s: &str) -> Result<Self, GraphError> {
        let j: GraphJson = serde_json::from_str(s).map_err(|e| GraphError::Json(e.to_string()))?;
        graph_from_wire(j)
    }
}

fn graph_from_wire(j: GraphJson) -> Result<AerialGraph, GraphError> {
    if j.deb.len() != j.n {
        return Err(GraphError::MixedVertexCount { expected: j.n, got: j.deb.len() });
    }
    let mut deb = Vec::with_capacity(j.n);
    for (v, list) in j.deb.into_iter().enumerate() {
        let mut l = Vec::with_capacity(list.len());
        for t in list {
            if t == 0 || t > j.n {
                return Err(GraphError::TargetOutOfRange { vertex: v, target: t, n: j.n });
            }
            l.push(t - 1);
        }
        deb.push(l);
    }
    AerialGraph::new(deb)
}

impl GraphSum {
    /// Serializes to the JSON wire format (terms in deterministic graph order).
    pub fn to_json(&self) -> String {
        let j = SumJson {
            terms: self
                .iter()
                .map(|(g, c)| TermJson {
                    coeff: coeff_to_string(c),
                    graph: GraphJson {
                        n: g.n(),
                        deb: g
                            .deb()
                            .iter()
                            .map(|l| l.iter().map(|&t| t + 1).collect())
                            .collect(),
                    },
                })
                .collect(),
        };
        serde_json::to_string(&j).expect("sum serialization cannot fail")
    }

    /// Parses the JSON wire format. The vertex count must be uniform across terms;
    /// for an empty term list the vertex count is taken as `default_n`.
    pub fn from_json(s: &str, default_n: usize) -> Result<Self, GraphError> {
        let j: SumJson = serde_json::from_str(s).map_err(|e| GraphError::Json(e.to_string()))?;
        let n = j.terms.first().map_or(default_n, |t| t.graph.n);
        let mut sum = GraphSum::empty(n);
        for term in j.terms {
            if term.graph.n != n {
                return Err(GraphError::MixedVertexCount { expected: n, got: term.graph.n });
            }
            let g = graph_from_wire(term.graph)?;
            let c = coeff_from_str(&term.coeff)?;
            sum.add_graph(g, c);
        }
        Ok(sum)
    }
}
