//! Vertex splitting and the graph coboundary.

use graph_core::{AerialGraph, Coefficient, GraphSum, Sign, TypePolicy};

/// A graph whose vertices carry labels {0, …, n} \ {gap}: the renumbering step that
/// precedes splitting. Slot `gap` is present but unused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapGraph {
    gap: usize,
    deb: Vec<Vec<usize>>,
}

impl GapGraph {
    /// The omitted label.
    pub fn gap(&self) -> usize {
        self.gap
    }

    /// Target list of `label` (empty for the gap slot).
    pub fn deb_of(&self, label: usize) -> &[usize] {
        &self.deb[label]
    }

    /// Labels in ascending order.
    pub fn labels(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.deb.len()).filter(move |&a| a != self.gap)
    }
}

/// Renumbers the vertices of `g` over the label set {0, …, n} \ {j}: vertex v keeps
/// label v when v < j and becomes v + 1 otherwise. Arrow lists are carried along with
/// their order; no sign is involved (the relabeling is order-preserving).
pub fn renumber_with_gap(g: &AerialGraph, j: usize) -> GapGraph {
    let n = g.n();
    assert!(j <= n, "gap label must lie in 0..=n");
    let map = |v: usize| if v < j { v } else { v + 1 };
    let mut deb = vec![Vec::new(); n + 1];
    for v in 0..n {
        deb[map(v)] = g.deb_of(v).iter().map(|&t| map(t)).collect();
    }
    GapGraph { gap: j, deb }
}

/// Orientation of the new arrow created by a splitting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// New arrow i → j.
    IJ,
    /// New arrow j → i.
    JI,
}

/// Bookkeeping for one splitting of label i into labels i, j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitDescriptor {
    /// Lower label of the pair (also the label that was split).
    pub i: usize,
    /// Upper label (the gap being filled).
    pub j: usize,
    /// Orientation of the new arrow.
    pub orientation: Orientation,
    /// How many old outgoing arrows stay with the source of the new arrow.
    pub r: usize,
    /// 1-based insertion position of the new arrow among those r arrows (1 ..= r+1).
    pub pos: usize,
    /// Which old incoming arrows are redirected to label i (one flag per in-arrow,
    /// in (source label, source position) order).
    pub to_i: Vec<bool>,
}

/// Whether the pair (i, j) of a split graph contracts properly: both endpoints meet
/// more than one arrow, or the pair is an isolated arrow (each endpoint meets exactly
/// the connecting arrow). Meaningful when i and j are joined by an arrow.
pub fn contracts_properly(g: &AerialGraph, i: usize, j: usize) -> bool {
    let ti = g.vertex_type(i);
    let tj = g.vertex_type(j);
    let di = ti.f + ti.l;
    let dj = tj.f + tj.l;
    di.min(dj) > 1 || (di == 1 && dj == 1)
}

/// All proper, policy-admissible splittings of label `i` of `renumber_with_gap(g, j)`
/// into labels i and j, as arrow-canonical graphs on n+1 vertices with their signs.
///
/// Enumeration order is deterministic: orientation i→j before j→i, then r ascending,
/// then insertion position ascending, then the in-arrow subset as a binary counter.
/// Under `TypePolicy::Unrestricted` the admissibility filter on the two new vertices
/// is skipped; properness and arrow antisymmetry always apply.
pub fn splittings(
    g: &AerialGraph,
    i: usize,
    j: usize,
    policy: TypePolicy,
) -> Vec<(AerialGraph, Sign)> {
    let mut out = Vec::new();
    for (_, graph, sign) in splittings_described(g, i, j, policy) {
        out.push((graph, sign));
    }
    out
}

/// As [`splittings`], but also yields the descriptor of each surviving term.
pub fn splittings_described(
    g: &AerialGraph,
    i: usize,
    j: usize,
    policy: TypePolicy,
) -> Vec<(SplitDescriptor, AerialGraph, Sign)> {
    let n = g.n();
    assert!(i < j && j <= n, "need 0 <= i < j <= n");
    let gap = renumber_with_gap(g, j);
    let ell = gap.deb_of(i).len();
    // In-arrows of the split label, identified by (source label, position).
    let ins: Vec<(usize, usize)> = gap
        .labels()
        .flat_map(|a| {
            gap.deb_of(a)
                .iter()
                .enumerate()
                .filter(|&(_, &t)| t == i)
                .map(move |(p, _)| (a, p))
        })
        .collect();

    let mut results = Vec::new();
    for orientation in [Orientation::IJ, Orientation::JI] {
        for r in 0..=ell {
            for pos in 1..=r + 1 {
                for mask in 0u32..1 << ins.len() {
                    let to_i: Vec<bool> = (0..ins.len()).map(|k| mask >> k & 1 == 1).collect();
                    let desc = SplitDescriptor { i, j, orientation, r, pos, to_i };
                    if let Some((graph, sign)) = build_split(&gap, &ins, &desc, policy) {
                        results.push((desc, graph, sign));
                    }
                }
            }
        }
    }
    results
}

/// Assembles one candidate splitting; `None` when it is improper, inadmissible, or
/// killed by a repeated arrow.
fn build_split(
    gap: &GapGraph,
    ins: &[(usize, usize)],
    desc: &SplitDescriptor,
    policy: TypePolicy,
) -> Option<(AerialGraph, Sign)> {
    let (i, j) = (desc.i, desc.j);
    let n1 = gap.deb.len();
    let goes_to_i = |a: usize, p: usize| {
        ins.iter()
            .position(|&(sa, sp)| (sa, sp) == (a, p))
            .map(|k| desc.to_i[k])
    };
    // Remap a target list: arrows into the split label follow the in-arrow assignment.
    let remap = |a: usize| -> Vec<usize> {
        gap.deb_of(a)
            .iter()
            .enumerate()
            .map(|(p, &t)| {
                if t == i {
                    if goes_to_i(a, p).expect("every arrow into i is catalogued") {
                        i
                    } else {
                        j
                    }
                } else {
                    t
                }
            })
            .collect()
    };

    let mut deb: Vec<Vec<usize>> = vec![Vec::new(); n1];
    for a in gap.labels() {
        if a != i {
            deb[a] = remap(a);
        }
    }
    let own = remap(i);
    let (keep, rest) = own.split_at(desc.r);
    let mut source_list = keep.to_vec();
    match desc.orientation {
        Orientation::IJ => {
            source_list.insert(desc.pos - 1, j);
            deb[i] = source_list;
            deb[j] = rest.to_vec();
        }
        Orientation::JI => {
            source_list.insert(desc.pos - 1, i);
            deb[j] = source_list;
            deb[i] = rest.to_vec();
        }
    }
    let graph = AerialGraph::new(deb).expect("split targets stay in range");

    if !contracts_properly(&graph, i, j) {
        return None;
    }
    if !matches!(policy, TypePolicy::Unrestricted { .. })
        && !(policy.admits(graph.vertex_type(i)) && policy.admits(graph.vertex_type(j)))
    {
        return None;
    }

    // Graded sign from the out-degree sequence of the split graph.
    let degrees = graph.out_degrees();
    let sum_below = |b: usize| -> usize { degrees[..b].iter().sum() };
    let dj = degrees[j];
    let mut exp = dj * sum_below(j) + (dj + 1) * sum_below(i) + (desc.pos - 1);
    if desc.orientation == Orientation::IJ {
        exp += degrees[i] * dj;
    }
    let sign: Sign = if exp.is_multiple_of(2) { 1 } else { -1 };

    let (canon, csign, zero) = graph.arrow_canonicalize();
    if zero {
        return None;
    }
    Some((canon, sign * csign))
}

/// The coboundary ∂δ: for every term, every label pair 0 ≤ i < j ≤ n, and every
/// surviving splitting, accumulate −coeff·sign·Δ_split on n+1 vertices.
pub fn coboundary(delta: &GraphSum, policy: TypePolicy) -> GraphSum {
    let n = delta.n();
    let mut out = GraphSum::empty(n + 1);
    for (g, coeff) in delta.iter() {
        for j in 1..=n {
            for i in 0..j {
                for (graph, sign) in splittings(g, i, j, policy) {
                    let signed = if sign == 1 { -coeff.clone() } else { coeff.clone() };
                    out.add_canonical(graph, signed);
                }
            }
        }
    }
    out
}

/// Coboundary of a single graph with coefficient 1.
pub fn coboundary_graph(g: &AerialGraph, policy: TypePolicy) -> GraphSum {
    coboundary(&GraphSum::from_graph(g.clone()), policy)
}

#[allow(dead_code)]
fn unused_coefficient_marker(_: Coefficient) {}
