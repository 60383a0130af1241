//! Enumeration of orbit representatives spanning one slice of the complex.

use std::collections::BTreeMap;

use graph_core::{
    permutations, symmetrize, AerialGraph, Coefficient, GraphSum, TypePolicy,
};
use num_traits::{One, Zero};

use crate::CohomologyError;

/// Whether isolated (0,0) vertices participate in the slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    IncludeIsolated,
    ExcludeIsolated,
}

/// One slice of the complex: a deterministic ordered basis of nonzero symmetrized
/// orbit representatives, each normalized so its minimal labeled graph has
/// coefficient 1.
#[derive(Debug, Clone)]
pub struct BasisSlice {
    n: usize,
    policy: TypePolicy,
    mode: Mode,
    reps: Vec<GraphSum>,
    /// Minimal labeled graph of each representative, in column order.
    mins: Vec<AerialGraph>,
    /// Column lookup for every labeled graph of every represented orbit.
    index: BTreeMap<AerialGraph, usize>,
}

impl BasisSlice {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn policy(&self) -> TypePolicy {
        self.policy
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Number of basis vectors.
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// The representatives in column order.
    pub fn reps(&self) -> &[GraphSum] {
        &self.reps
    }

    /// The minimal labeled graph of column k.
    pub fn min_graph(&self, k: usize) -> &AerialGraph {
        &self.mins[k]
    }

    /// The column whose orbit contains the given canonical labeled graph.
    pub fn column_of(&self, g: &AerialGraph) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Coordinates of a symmetric sum in this basis; errors when the sum is not in
    /// the slice's span (foreign orbit or non-symmetric combination).
    pub fn express(&self, s: &GraphSum) -> Result<Vec<Coefficient>, CohomologyError> {
        let mut coords = vec![Coefficient::zero(); self.dim()];
        for (k, m) in self.mins.iter().enumerate() {
            let c = s.coeff_of(m);
            if !c.is_zero() {
                coords[k] = c;
            }
        }
        // Reconstruction check: the coordinates must reproduce the sum exactly.
        let mut rebuilt = GraphSum::empty(self.n);
        for (k, x) in coords.iter().enumerate() {
            if !x.is_zero() {
                rebuilt.add_assign(&self.reps[k].scaled(x))?;
            }
        }
        let diff = s.sub(&rebuilt)?;
        if let Some((g, _)) = diff.iter().next() {
            return Err(CohomologyError::NotInSpan(g.deb().to_vec()));
        }
        Ok(coords)
    }

    /// The sum with the given coordinates.
    pub fn reconstruct(&self, coords: &[Coefficient]) -> Result<GraphSum, CohomologyError> {
        let mut out = GraphSum::empty(self.n);
        for (k, x) in coords.iter().enumerate() {
            if !x.is_zero() {
                out.add_assign(&self.reps[k].scaled(x))?;
            }
        }
        Ok(out)
    }
}

/// All admissible graphs on n vertices up to graded relabeling and arrow reordering,
/// excluding orbits whose symmetrization vanishes.
pub fn enumerate_basis(
    n: usize,
    policy: TypePolicy,
    mode: Mode,
) -> Result<BasisSlice, CohomologyError> {
    assert!(n >= 1, "slices start at one vertex");
    let candidates = match policy {
        TypePolicy::Ascending | TypePolicy::Descending => cycle_point_graphs(n, mode),
        TypePolicy::Unrestricted { max_out } => unrestricted_graphs(n, max_out, mode)?,
    };

    let perms = permutations(n);
    let mut index: BTreeMap<AerialGraph, usize> = BTreeMap::new();
    let mut zero_orbit: BTreeMap<AerialGraph, ()> = BTreeMap::new();
    let mut reps = Vec::new();
    let mut mins = Vec::new();

    for g in candidates {
        let (cg, _, zero) = g.arrow_canonicalize();
        if zero || index.contains_key(&cg) || zero_orbit.contains_key(&cg) {
            continue;
        }
        let s = symmetrize(&cg);
        if s.is_empty() {
            for p in &perms {
                let (img, _) = cg.relabel(p).expect("valid permutation");
                let (canon, _, _) = img.arrow_canonicalize();
                zero_orbit.insert(canon, ());
            }
            continue;
        }
        let min = s.iter().next().expect("nonzero sum has terms").0.clone();
        let lead = s.coeff_of(&min);
        let rep = s.scaled(&lead.recip());
        debug_assert!(rep.coeff_of(&min).is_one());
        let col = reps.len();
        for (term, _) in rep.iter() {
            index.insert(term.clone(), col);
        }
        reps.push(rep);
        mins.push(min);
    }

    Ok(BasisSlice { n, policy, mode, reps, mins, index })
}

/// Disjoint unions of simple cycles plus isolated vertices: the ascending (and,
/// transposed, descending) slice. Enumerated as permutations of vertex subsets whose
/// functional graph is the cycle decomposition.
fn cycle_point_graphs(n: usize, mode: Mode) -> Vec<AerialGraph> {
    let mut graphs = Vec::new();
    for mask in 0u32..1 << n {
        let support: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if matches!(mode, Mode::ExcludeIsolated) && support.len() != n {
            continue;
        }
        let k = support.len();
        for p in permutations(k) {
            // Fixed points of p would be loops (fine); vertices outside support are
            // isolated. Each permutation gives one union of cycles on the support.
            let mut deb = vec![Vec::new(); n];
            for (a, &pa) in p.iter().enumerate() {
                deb[support[a]] = vec![support[pa]];
            }
            graphs.push(AerialGraph::new(deb).expect("targets in range"));
        }
    }
    graphs
}

/// Brute-force slice for the capped unrestricted policy: every vertex gets a strictly
/// increasing target list of length ≤ cap (arrow-canonical form, repeats excluded).
fn unrestricted_graphs(
    n: usize,
    max_out: usize,
    mode: Mode,
) -> Result<Vec<AerialGraph>, CohomologyError> {
    let mut lists: Vec<Vec<usize>> = vec![Vec::new()];
    let cap = max_out.min(n);
    for size in 1..=cap {
        grow_lists(n, size, &mut lists);
    }
    let total = (lists.len() as f64).powi(n as i32);
    if total > 5e6 {
        return Err(CohomologyError::SliceTooLarge(n));
    }
    let mut graphs = Vec::new();
    let mut idx = vec![0usize; n];
    'outer: loop {
        let deb: Vec<Vec<usize>> = idx.iter().map(|&i| lists[i].clone()).collect();
        let g = AerialGraph::new(deb).expect("targets in range");
        let keep = match mode {
            Mode::IncludeIsolated => true,
            Mode::ExcludeIsolated => g.vertex_types().iter().all(|t| t.f + t.l > 0),
        };
        if keep {
            graphs.push(g);
        }
        let mut k = n;
        loop {
            if k == 0 {
                break 'outer;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < lists.len() {
                break;
            }
            idx[k] = 0;
        }
    }
    Ok(graphs)
}

/// Appends all strictly increasing target lists of the given size over 0..n.
fn grow_lists(n: usize, size: usize, lists: &mut Vec<Vec<usize>>) {
    let mut pick: Vec<usize> = (0..size).collect();
    if size > n {
        return;
    }
    loop {
        lists.push(pick.clone());
        // Next combination in lexicographic order.
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pick[i] < n - (size - i) {
                pick[i] += 1;
                for j in i + 1..size {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(deb: &[&[usize]]) -> AerialGraph {
        AerialGraph::new(deb.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    #[test]
    fn one_vertex_ascending_include_has_loop_and_point() {
        let slice = enumerate_basis(1, TypePolicy::Ascending, Mode::IncludeIsolated).unwrap();
        assert_eq!(slice.dim(), 2);
        let mins: Vec<_> = (0..2).map(|k| slice.min_graph(k).clone()).collect();
        assert!(mins.contains(&g(&[&[]])));
        assert!(mins.contains(&g(&[&[0]])));
    }

    #[test]
    fn one_vertex_ascending_exclude_has_only_the_loop() {
        let slice = enumerate_basis(1, TypePolicy::Ascending, Mode::ExcludeIsolated).unwrap();
        assert_eq!(slice.dim(), 1);
        assert_eq!(slice.min_graph(0), &g(&[&[0]]));
    }

    #[test]
    fn two_vertex_ascending_include_orbits() {
        // 2-cycle and loop⊔loop symmetrize to zero; loop⊔point and point⊔point survive.
        let slice = enumerate_basis(2, TypePolicy::Ascending, Mode::IncludeIsolated).unwrap();
        assert_eq!(slice.dim(), 2);
        let slice_ex = enumerate_basis(2, TypePolicy::Ascending, Mode::ExcludeIsolated).unwrap();
        assert_eq!(slice_ex.dim(), 0);
    }

    #[test]
    fn three_vertex_ascending_exclude_is_the_odd_wheel_orbit() {
        let slice = enumerate_basis(3, TypePolicy::Ascending, Mode::ExcludeIsolated).unwrap();
        assert_eq!(slice.dim(), 1);
        // The orbit of the 3-cycle; its minimal labeled graph is Δ₃ itself.
        assert_eq!(slice.min_graph(0), &g(&[&[1], &[2], &[0]]));
    }

    #[test]
    fn representatives_are_normalized_and_indexed() {
        let slice = enumerate_basis(3, TypePolicy::Ascending, Mode::IncludeIsolated).unwrap();
        for k in 0..slice.dim() {
            let rep = &slice.reps()[k];
            assert!(rep.coeff_of(slice.min_graph(k)).is_one());
            for (term, _) in rep.iter() {
                assert_eq!(slice.column_of(term), Some(k));
            }
        }
    }

    #[test]
    fn express_round_trips_symmetrized_graphs() {
        let slice = enumerate_basis(3, TypePolicy::Ascending, Mode::IncludeIsolated).unwrap();
        let s = symmetrize(&g(&[&[0], &[], &[]]));
        let coords = slice.express(&s).unwrap();
        assert_eq!(slice.reconstruct(&coords).unwrap(), s);
        assert_eq!(coords.iter().filter(|x| !x.is_zero()).count(), 1);
    }

    #[test]
    fn express_rejects_foreign_sums() {
        let slice = enumerate_basis(2, TypePolicy::Ascending, Mode::ExcludeIsolated).unwrap();
        let s = symmetrize(&g(&[&[0], &[]]));
        assert!(matches!(slice.express(&s), Err(CohomologyError::NotInSpan(_))));
    }

    #[test]
    fn unrestricted_slice_contains_higher_order_orbits() {
        let pol = TypePolicy::Unrestricted { max_out: 2 };
        let slice = enumerate_basis(2, pol, Mode::IncludeIsolated).unwrap();
        // Contains e.g. the orbit of the double-out vertex [[0,1],[]] (type (1,2)).
        assert!(slice.column_of(&g(&[&[0, 1], &[]])).is_some());
        assert!(slice.dim() >= 4);
    }

    #[test]
    fn ascending_brute_force_agrees_with_cycle_enumeration() {
        // Oracle: enumerate via the unrestricted brute force and filter by policy.
        for n in 1..=3 {
            let fast = enumerate_basis(n, TypePolicy::Ascending, Mode::IncludeIsolated).unwrap();
            let all = unrestricted_graphs(n, 2, Mode::IncludeIsolated).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            let mut count = 0;
            for cand in all {
                if !cand.is_admissible(TypePolicy::Ascending) {
                    continue;
                }
                let (cg, _, zero) = cand.arrow_canonicalize();
                if zero {
                    continue;
                }
                let s = symmetrize(&cg);
                if s.is_empty() {
                    continue;
                }
                let min = s.iter().next().unwrap().0.clone();
                if seen.insert(min) {
                    count += 1;
                }
            }
            assert_eq!(fast.dim(), count, "orbit count mismatch at n = {n}");
        }
    }
}
