//! Graph-driven multidifferential operators on polyvector fields: the operator
//! B_Γ of a legged graph, the cochain C_δ of a graph combination, the graded
//! Chevalley coboundary evaluated on arguments, and the wheel trace evaluator.

use crate::poly::Poly;
use crate::polyvector::{parity_sign, perm_sign, PolyVector};
use crate::{graded_signature, nabla, TensorError};
use graph_core::{coeff_int, permutations, AerialGraph, Coefficient, GraphSum};
use num_traits::{One, Zero};

/// An aerial graph together with per-vertex leg counts m₁, …, m_n.
///
/// The base keeps its target lists in the given order (arrow order is
/// significant: permuting a list flips the operator's sign); each vertex's legs
/// follow its arrows in the induced full arrow list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeggedGraph {
    pub base: AerialGraph,
    pub legs: Vec<usize>,
}

impl LeggedGraph {
    pub fn new(base: AerialGraph, legs: Vec<usize>) -> Result<Self, TensorError> {
        if legs.len() != base.n() {
            return Err(TensorError::ArityMismatch { expected: base.n(), got: legs.len() });
        }
        Ok(LeggedGraph { base, legs })
    }
}

/// The parity of the shuffle moving every vertex's legs behind all aerial
/// arrows: (−1)^{Σᵢ mᵢ·(ℓ_{i+1}+⋯+ℓ_n)}.
pub fn legs_sign(ells: &[usize], legs: &[usize]) -> i64 {
    debug_assert_eq!(ells.len(), legs.len());
    let mut exp = 0usize;
    let mut suffix: usize = ells.iter().sum();
    for (l, m) in ells.iter().zip(legs) {
        suffix -= l;
        exp += m * suffix;
    }
    if exp.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Steps an odometer over base^len; returns false after the last state.
fn advance(state: &mut [usize], base: usize) -> bool {
    for digit in state.iter_mut() {
        *digit += 1;
        if *digit < base {
            return true;
        }
        *digit = 0;
    }
    false
}

fn check_same_dimension(args: &[PolyVector]) -> Result<usize, TensorError> {
    let d = args.first().map(PolyVector::d).unwrap_or(0);
    for a in args {
        if a.d() != d {
            return Err(TensorError::DimensionMismatch { expected: d, got: a.d() });
        }
    }
    Ok(d)
}

/// The |m|-differential operator B_Γ of a legged graph, evaluated on one
/// polyvector per vertex (αᵢ of order ℓᵢ + mᵢ):
/// Σ over arrow index assignments of Πᵢ ∂_{Fin(i)} αᵢ^{t_{Deb(i)}}, wedged over
/// the leg directions of vertex 1, then vertex 2, and so on.
pub fn b_gamma(gamma: &LeggedGraph, args: &[PolyVector]) -> Result<PolyVector, TensorError> {
    let n = gamma.base.n();
    if args.len() != n {
        return Err(TensorError::ArityMismatch { expected: n, got: args.len() });
    }
    let d = check_same_dimension(args)?;
    for (i, a) in args.iter().enumerate() {
        let expected = gamma.base.deb_of(i).len() + gamma.legs[i];
        if a.order() != expected {
            return Err(TensorError::OrderMismatch { vertex: i, expected, got: a.order() });
        }
    }
    let total_legs: usize = gamma.legs.iter().sum();
    let mut out = PolyVector::zero(d, total_legs);
    if d == 0 && gamma.base.arrow_count() + total_legs > 0 {
        return Ok(out);
    }

    // Flat arrow list in per-vertex order; fin[v] = positions of arrows into v.
    let mut arrows: Vec<(usize, usize)> = Vec::new();
    for (src, list) in gamma.base.deb().iter().enumerate() {
        for &tgt in list {
            arrows.push((src, tgt));
        }
    }
    let mut fin: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (pos, &(_, tgt)) in arrows.iter().enumerate() {
        fin[tgt].push(pos);
    }
    let m_factorials: Vec<Coefficient> = gamma
        .legs
        .iter()
        .map(|&m| (1..=m).fold(Coefficient::one(), |f, k| f * Coefficient::from_integer(k.into())))
        .collect();

    let mut t = vec![0usize; arrows.len()];
    loop {
        // Per-vertex partial polyvectors over that vertex's leg directions.
        let mut term = PolyVector::scalar(d, Poly::constant(d, coeff_int(1)));
        for i in 0..n {
            let m = gamma.legs[i];
            let mut part = PolyVector::zero(d, m);
            let arrow_vals: Vec<usize> =
                (0..arrows.len()).filter(|&pos| arrows[pos].0 == i).map(|pos| t[pos]).collect();
            let mut leg_vals: Vec<usize> = (0..m).collect();
            'legs: loop {
                if m > d {
                    break 'legs;
                }
                let mut tuple = arrow_vals.clone();
                tuple.extend_from_slice(&leg_vals);
                let mut poly = args[i].component(&tuple);
                for &pos in &fin[i] {
                    if poly.is_zero() {
                        break;
                    }
                    poly = poly.partial(t[pos]);
                }
                if !poly.is_zero() {
                    part.add_wedge_term(&leg_vals, poly.scale(&m_factorials[i]));
                }
                // Next strictly increasing m-tuple over 0..d.
                let mut k = m;
                loop {
                    if k == 0 {
                        break 'legs;
                    }
                    k -= 1;
                    if leg_vals[k] < d - (m - k) {
                        leg_vals[k] += 1;
                        for j in k + 1..m {
                            leg_vals[j] = leg_vals[j - 1] + 1;
                        }
                        break;
                    }
                }
            }
            if part.is_zero() {
                term = PolyVector::zero(d, total_legs);
                break;
            }
            term = term.wedge(&part)?;
        }
        if !term.is_zero() {
            out = out.add(&term)?;
        }
        if arrows.is_empty() || !advance(&mut t, d) {
            break;
        }
    }
    Ok(out)
}

/// The cochain C_δ evaluated on one polyvector per vertex.
///
/// Per graph term the leg counts are forced, mᵢ = |αᵢ| − ℓᵢ, and the term
/// vanishes when some mᵢ < 0 or when legs would land on an arrow-less vertex
/// (an aerial vertex carries legs only alongside outgoing arrows; an isolated
/// vertex pairs only with order-0 arguments). Each surviving term contributes
/// ε(m₁,…,m_n)·B with the shuffle sign of moving all legs behind the arrows.
pub fn cochain_eval(delta: &GraphSum, args: &[PolyVector]) -> Result<PolyVector, TensorError> {
    if args.len() != delta.n() {
        return Err(TensorError::ArityMismatch { expected: delta.n(), got: args.len() });
    }
    let d = check_same_dimension(args)?;
    let mut out = PolyVector::zero(d, 0);
    'terms: for (g, c) in delta.iter() {
        let ells = g.out_degrees();
        let mut legs = Vec::with_capacity(ells.len());
        for (i, &l) in ells.iter().enumerate() {
            let p = args[i].order();
            if p < l || (l == 0 && p > 0) {
                continue 'terms;
            }
            legs.push(p - l);
        }
        let sign = legs_sign(&ells, &legs);
        let gamma = LeggedGraph { base: g.clone(), legs };
        let term = b_gamma(&gamma, args)?;
        out = out.add(&term.scale(&(c * coeff_int(sign))))?;
    }
    Ok(out)
}

/// The graded Chevalley coboundary (∂C_δ)(α₀,…,α_n), from the three-sum formula
/// for |·|-symmetric cochains with Koszul signs on the parities |αᵢ| and the
/// cochain parity |C_Δ| ≡ arrow count (mod 2), applied per graph term.
pub fn chevalley_coboundary_eval(
    delta: &GraphSum,
    args: &[PolyVector],
) -> Result<PolyVector, TensorError> {
    let n = delta.n();
    if args.len() != n + 1 {
        return Err(TensorError::ArityMismatch { expected: n + 1, got: args.len() });
    }
    let d = check_same_dimension(args)?;
    let parities: Vec<usize> = args.iter().map(PolyVector::order).collect();
    let mut out = PolyVector::zero(d, 0);
    for (g, c) in delta.iter() {
        let e_parity = g.arrow_count() % 2;
        let single = GraphSum::from_graph(g.clone());
        let mut acc = PolyVector::zero(d, 0);
        for i in 0..=n {
            let rest: Vec<PolyVector> = (0..=n).filter(|&k| k != i).map(|k| args[k].clone()).collect();
            let ci = cochain_eval(&single, &rest)?;
            if ci.is_zero() {
                continue;
            }
            // ε(i, 0…î…n)·(−1)^{|C|(|αᵢ|−1)} ∇_{αᵢ} C(…)
            let mut seq = vec![i];
            seq.extend((0..=n).filter(|&k| k != i));
            let s1 = coeff_int(graded_signature(&parities, &seq))
                * parity_sign(e_parity * (parities[i] + 1));
            acc = acc.add(&nabla(&args[i], &ci)?.scale(&s1))?;
            // (−1)^{|C|}·ε(0…î…n, i) ∇_{C(…)} αᵢ
            let mut seq = (0..=n).filter(|&k| k != i).collect::<Vec<_>>();
            seq.push(i);
            let s2 = coeff_int(graded_signature(&parities, &seq)) * parity_sign(e_parity);
            acc = acc.add(&nabla(&ci, &args[i])?.scale(&s2))?;
        }
        for i in 0..=n {
            for j in 0..=n {
                if i == j {
                    continue;
                }
                let front = nabla(&args[i], &args[j])?;
                if front.is_zero() {
                    continue;
                }
                let mut newargs = vec![front];
                newargs.extend((0..=n).filter(|&k| k != i && k != j).map(|k| args[k].clone()));
                let term = cochain_eval(&single, &newargs)?;
                if term.is_zero() {
                    continue;
                }
                // −ε(i, j, 0…î…ĵ…n) C(∇_{αᵢ}αⱼ, …)
                let mut seq = vec![i, j];
                seq.extend((0..=n).filter(|&k| k != i && k != j));
                let s3 = -coeff_int(graded_signature(&parities, &seq));
                acc = acc.add(&term.scale(&s3))?;
            }
        }
        out = out.add(&acc.scale(c))?;
    }
    Ok(out)
}

/// Square rational matrices, row-major.
pub type RatMatrix = Vec<Vec<Coefficient>>;

fn rat_mat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let n = a.len();
    let mut out = vec![vec![Coefficient::zero(); n]; n];
    for (i, row) in a.iter().enumerate() {
        for k in 0..n {
            if row[k].is_zero() {
                continue;
            }
            for j in 0..n {
                let prod = &row[k] * &b[k][j];
                out[i][j] += prod;
            }
        }
    }
    out
}

/// Σ_{π∈S_k} sign(π)·tr(A_{π(1)}⋯A_{π(k)}), the antisymmetrized trace whose
/// vanishing for k = 2p+1 > 2d is the standard-identity input to the wheel
/// vanishing theorem.
pub fn antisym_trace(mats: &[RatMatrix]) -> Result<Coefficient, TensorError> {
    if mats.is_empty() {
        return Err(TensorError::BadMatrix("no matrices given".into()));
    }
    let n = mats[0].len();
    for m in mats {
        if m.len() != n || m.iter().any(|row| row.len() != n) {
            return Err(TensorError::BadMatrix(format!("expected square matrices of size {n}")));
        }
    }
    let mut total = Coefficient::zero();
    for perm in permutations(mats.len()) {
        let mut prod = mats[perm[0]].clone();
        for &k in &perm[1..] {
            prod = rat_mat_mul(&prod, &mats[k]);
        }
        let mut tr = Coefficient::zero();
        for (i, row) in prod.iter().enumerate() {
            tr += row[i].clone();
        }
        if perm_sign(&perm) < 0 {
            tr = -tr;
        }
        total += tr;
    }
    Ok(total)
}

fn poly_mat_mul(a: &[Vec<Poly>], b: &[Vec<Poly>], d: usize) -> Vec<Vec<Poly>> {
    let n = a.len();
    let mut out = vec![vec![Poly::zero(d); n]; n];
    for (i, row) in a.iter().enumerate() {
        for k in 0..n {
            if row[k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] = out[i][j].add(&row[k].mul(&b[k][j]));
            }
        }
    }
    out
}

/// The wheel cochain C_{R_{2p+1}} computed through Jacobian traces instead of
/// graph summation: for every choice of one "wheel slot" per argument block and
/// every assignment of the remaining (hatted) slots, the antisymmetrized trace
/// of the arguments' partial Jacobians contributes against the hatted wedge,
/// with the plain parity of the slot shuffle as sign. All arguments must share
/// one order k ≥ 1; the chain is oriented to match the wheel's arrow direction.
///
/// Component antisymmetry makes every wheel-slot choice contribute the same
/// signed term, so the sum over the k^{2p+1} choices is averaged back out;
/// this pins the evaluator to the graph sum exactly (for vector fields, k = 1,
/// there is a single choice and the average is vacuous).
pub fn wheel_trace_eval(p: usize, args: &[PolyVector]) -> Result<PolyVector, TensorError> {
    let m = 2 * p + 1;
    if args.len() != m {
        return Err(TensorError::ArityMismatch { expected: m, got: args.len() });
    }
    let d = check_same_dimension(args)?;
    let k = args[0].order();
    if k == 0 || args.iter().any(|a| a.order() != k) {
        return Err(TensorError::UnequalOrders);
    }
    let hatted_per_block = k - 1;
    let total_hatted = m * hatted_per_block;
    let mut out = PolyVector::zero(d, total_hatted);
    if d == 0 {
        return Ok(out);
    }
    let perms = permutations(m);

    let mut jpos = vec![0usize; m]; // wheel-slot position inside each block
    loop {
        // Slot shuffle parity: wheel slots first, then hatted slots ascending.
        let mut seq: Vec<usize> = (0..m).map(|i| i * k + jpos[i]).collect();
        let chosen = seq.clone();
        seq.extend((0..m * k).filter(|s| !chosen.contains(s)));
        let eps = perm_sign(&seq);

        let mut h = vec![0usize; total_hatted];
        loop {
            // Hatted values in slot order, block by block.
            let mut ok = true;
            let mut jacobians: Vec<Vec<Vec<Poly>>> = Vec::with_capacity(m);
            for i in 0..m {
                let hvals = &h[i * hatted_per_block..(i + 1) * hatted_per_block];
                // ξᵢ^u = component of αᵢ on its block with u in the wheel slot.
                let mut xi: Vec<Poly> = Vec::with_capacity(d);
                for u in 0..d {
                    let mut tuple = Vec::with_capacity(k);
                    let mut hi = 0;
                    for pos in 0..k {
                        if pos == jpos[i] {
                            tuple.push(u);
                        } else {
                            tuple.push(hvals[hi]);
                            hi += 1;
                        }
                    }
                    xi.push(args[i].component(&tuple));
                }
                if xi.iter().all(Poly::is_zero) {
                    ok = false;
                    break;
                }
                let jac: Vec<Vec<Poly>> =
                    (0..d).map(|u| (0..d).map(|v| xi[u].partial(v)).collect()).collect();
                jacobians.push(jac);
            }
            if ok {
                let mut term = Poly::zero(d);
                for perm in &perms {
                    // Chain reversed against the argument order, matching the
                    // wheel's arrows (vertex i is derived along the arrow from
                    // its predecessor).
                    let mut prod = jacobians[perm[m - 1]].clone();
                    for &idx in perm[..m - 1].iter().rev() {
                        prod = poly_mat_mul(&prod, &jacobians[idx], d);
                    }
                    let mut tr = Poly::zero(d);
                    for (u, row) in prod.iter().enumerate() {
                        tr = tr.add(&row[u]);
                    }
                    term = if perm_sign(perm) < 0 { term.sub(&tr) } else { term.add(&tr) };
                }
                if !term.is_zero() {
                    let signed = if eps < 0 { term.neg() } else { term };
                    out.add_wedge_term(&h.to_vec(), signed);
                }
            }
            if total_hatted == 0 || !advance(&mut h, d) {
                break;
            }
        }
        if !advance(&mut jpos, k) {
            break;
        }
    }
    let choices = num_bigint::BigInt::from(k).pow(m as u32);
    Ok(out.scale(&Coefficient::new(1.into(), choices)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyvector::perm_sign;
    use graph_core::coeff_int;
    use proptest::prelude::*;

    fn g(deb: &[&[usize]]) -> AerialGraph {
        AerialGraph::new(deb.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    fn mono(d: usize, exp: &[usize], c: i64) -> Poly {
        Poly::monomial(d, exp.to_vec(), coeff_int(c))
    }

    fn pv(d: usize, p: usize, terms: &[(&[usize], Poly)]) -> PolyVector {
        let mut v = PolyVector::zero(d, p);
        for (idx, poly) in terms {
            v.add_wedge_term(idx, poly.clone());
        }
        v
    }

    /// Arguments of orders (3, 0, 2) at d = 3 for the three-vertex operator.
    fn sample_args_d3() -> (PolyVector, PolyVector, PolyVector) {
        let a1 = pv(3, 3, &[(&[0, 1, 2], mono(3, &[2, 0, 0], 1).add(&mono(3, &[0, 1, 1], 2)))]);
        let a2 = PolyVector::scalar(3, mono(3, &[1, 1, 1], 1).add(&mono(3, &[0, 3, 0], 1)));
        let a3 = pv(
            3,
            2,
            &[
                (&[0, 1], mono(3, &[0, 0, 2], 1)),
                (&[1, 2], mono(3, &[1, 1, 0], 1)),
                (&[0, 2], mono(3, &[0, 1, 0], 2)),
            ],
        );
        (a1, a2, a3)
    }

    #[test]
    fn single_vertex_with_legs_reproduces_the_argument() {
        // One vertex, no arrows, p legs: the operator is the identity on
        // order-p arguments, for any p.
        let point = g(&[&[]]);
        let f = PolyVector::scalar(2, mono(2, &[1, 1], 3));
        let gamma = LeggedGraph::new(point.clone(), vec![0]).unwrap();
        assert_eq!(b_gamma(&gamma, std::slice::from_ref(&f)).unwrap(), f);

        let v = pv(2, 1, &[(&[0], mono(2, &[0, 1], 1)), (&[1], mono(2, &[2, 0], 5))]);
        let gamma = LeggedGraph::new(point.clone(), vec![1]).unwrap();
        assert_eq!(b_gamma(&gamma, std::slice::from_ref(&v)).unwrap(), v);

        let w = pv(3, 2, &[(&[0, 1], mono(3, &[0, 0, 1], 1)), (&[1, 2], mono(3, &[1, 0, 0], 7))]);
        let gamma = LeggedGraph::new(point, vec![2]).unwrap();
        assert_eq!(b_gamma(&gamma, std::slice::from_ref(&w)).unwrap(), w);
    }

    #[test]
    fn three_vertex_operator_matches_the_displayed_index_sum() {
        // Graph: vertex 1 -> vertices 2 and 3, vertex 3 -> vertex 2, with one
        // leg on vertex 1 and one on vertex 3. The displayed operator is
        //   Σ α₁^{t₁t₂t₃} · ∂²α₂/∂x^{t₁}∂x^{t₄} · ∂α₃^{t₄t₅}/∂x^{t₂} · ∂_{t₃}∧∂_{t₅}
        // summed freely over all five indices.
        let d = 3;
        let (a1, a2, a3) = sample_args_d3();
        let f2 = a2.component(&[]);
        let mut expected = PolyVector::zero(d, 2);
        for t1 in 0..d {
            for t2 in 0..d {
                for t3 in 0..d {
                    for t4 in 0..d {
                        for t5 in 0..d {
                            let c1 = a1.component(&[t1, t2, t3]);
                            if c1.is_zero() {
                                continue;
                            }
                            let c2 = f2.partial(t1).partial(t4);
                            if c2.is_zero() {
                                continue;
                            }
                            let c3 = a3.component(&[t4, t5]).partial(t2);
                            if c3.is_zero() {
                                continue;
                            }
                            expected.add_wedge_term(&[t3, t5], c1.mul(&c2).mul(&c3));
                        }
                    }
                }
            }
        }
        let gamma = LeggedGraph::new(g(&[&[1, 2], &[], &[1]]), vec![1, 0, 1]).unwrap();
        let got = b_gamma(&gamma, &[a1, a2, a3]).unwrap();
        assert!(!got.is_zero());
        assert_eq!(got, expected);
    }

    #[test]
    fn permuting_a_target_list_flips_the_sign() {
        let (a1, a2, a3) = sample_args_d3();
        let args = [a1, a2, a3];
        let gamma = LeggedGraph::new(g(&[&[1, 2], &[], &[1]]), vec![1, 0, 1]).unwrap();
        let swapped = LeggedGraph::new(g(&[&[2, 1], &[], &[1]]), vec![1, 0, 1]).unwrap();
        let b = b_gamma(&gamma, &args).unwrap();
        let bs = b_gamma(&swapped, &args).unwrap();
        assert!(!b.is_zero());
        assert_eq!(bs, b.neg());
    }

    #[test]
    fn legs_sign_matches_small_cases() {
        assert_eq!(legs_sign(&[1, 1], &[1, 0]), -1);
        assert_eq!(legs_sign(&[1, 1], &[0, 1]), 1);
        assert_eq!(legs_sign(&[1, 1, 1], &[0, 1, 0]), -1);
        assert_eq!(legs_sign(&[2, 1, 0], &[1, 2, 3]), -1);
        assert_eq!(legs_sign(&[0], &[5]), 1);
        assert_eq!(legs_sign(&[], &[]), 1);
    }

    /// The claimed closed form of the shuffle parity, checked against moving
    /// the leg slots behind the arrow slots one adjacent swap at a time.
    fn shuffle_parity(ells: &[usize], legs: &[usize]) -> i64 {
        let mut arrow_slots = Vec::new();
        let mut leg_slots = Vec::new();
        let mut label = 0;
        for (&l, &m) in ells.iter().zip(legs) {
            for _ in 0..l {
                arrow_slots.push(label);
                label += 1;
            }
            for _ in 0..m {
                leg_slots.push(label);
                label += 1;
            }
        }
        arrow_slots.extend(leg_slots);
        perm_sign(&arrow_slots)
    }

    proptest! {
        #[test]
        fn legs_sign_matches_explicit_shuffle_parity(
            pairs in proptest::collection::vec((0usize..4, 0usize..4), 1..6)
        ) {
            let ells: Vec<usize> = pairs.iter().map(|&(l, _)| l).collect();
            let legs: Vec<usize> = pairs.iter().map(|&(_, m)| m).collect();
            prop_assert_eq!(legs_sign(&ells, &legs), shuffle_parity(&ells, &legs));
        }
    }

    #[test]
    fn cochain_convention_inserts_the_leg_shuffle_sign() {
        // Orders (1, 2, 1) on the 3-cycle force legs (0, 1, 0), whose shuffle
        // past the outgoing arrows costs one transposition.
        let cycle = GraphSum::from_graph(g(&[&[1], &[2], &[0]]));
        let a1 = pv(2, 1, &[(&[0], mono(2, &[0, 1], 1)), (&[1], mono(2, &[2, 0], 1))]);
        let a2 = pv(2, 2, &[(&[0, 1], mono(2, &[1, 0], 1).add(&mono(2, &[0, 1], 1)))]);
        let a3 = pv(2, 1, &[(&[0], mono(2, &[1, 1], 1)), (&[1], mono(2, &[0, 2], 1))]);
        let legged = LeggedGraph::new(g(&[&[1], &[2], &[0]]), vec![0, 1, 0]).unwrap();
        let b = b_gamma(&legged, &[a1.clone(), a2.clone(), a3.clone()]).unwrap();
        let c = cochain_eval(&cycle, &[a1, a2, a3]).unwrap();
        assert!(!b.is_zero());
        assert_eq!(c, b.neg());
    }

    #[test]
    fn cochain_terms_with_impossible_leg_counts_vanish() {
        // Vertex orders below the outgoing-arrow count: no leg assignment.
        let two_cycle = GraphSum::from_graph(g(&[&[1], &[0]]));
        let f = PolyVector::scalar(2, mono(2, &[1, 0], 1));
        let v = pv(2, 1, &[(&[0], mono(2, &[0, 1], 1))]);
        assert!(cochain_eval(&two_cycle, &[f.clone(), v.clone()]).unwrap().is_zero());

        // An arrow-less vertex accepts only order-0 arguments.
        let edge = GraphSum::from_graph(g(&[&[1], &[]]));
        let w = pv(2, 2, &[(&[0, 1], mono(2, &[0, 0], 1))]);
        assert!(cochain_eval(&edge, &[v, w]).unwrap().is_zero());

        // Two isolated vertices multiply their order-0 arguments.
        let points = GraphSum::from_graph(g(&[&[], &[]]));
        let x1 = PolyVector::scalar(2, mono(2, &[1, 0], 1));
        let x2 = PolyVector::scalar(2, mono(2, &[0, 1], 1));
        let prod = cochain_eval(&points, &[x1, x2]).unwrap();
        assert_eq!(prod, PolyVector::scalar(2, mono(2, &[1, 1], 1)));
    }

    #[test]
    fn graded_coboundary_of_the_point_cochain() {
        // The 1-cochain of the single-vertex graph pairs only with functions,
        // so its coboundary on (x¹, ∂₁∧∂₂) reduces to ∇_{∂₁∧∂₂}(x¹) = ∂₂.
        let point = GraphSum::from_graph(g(&[&[]]));
        let x1 = PolyVector::scalar(2, mono(2, &[1, 0], 1));
        let bivec = pv(2, 2, &[(&[0, 1], Poly::constant(2, coeff_int(1)))]);
        let expected = pv(2, 1, &[(&[1], Poly::constant(2, coeff_int(1)))]);
        let fwd = chevalley_coboundary_eval(&point, &[x1.clone(), bivec.clone()]).unwrap();
        assert_eq!(fwd, expected);
        // Both argument orders agree here: the even-order argument commutes.
        let rev = chevalley_coboundary_eval(&point, &[bivec, x1]).unwrap();
        assert_eq!(rev, expected);
    }

    fn int_matrix(rows: &[&[i64]]) -> RatMatrix {
        rows.iter().map(|r| r.iter().map(|&x| coeff_int(x)).collect()).collect()
    }

    #[test]
    fn antisym_trace_alternates_and_matches_hand_computation() {
        // 1×1 matrices commute: any antisymmetrized word vanishes.
        let ones = [int_matrix(&[&[2]]), int_matrix(&[&[3]]), int_matrix(&[&[5]])];
        assert_eq!(antisym_trace(&ones).unwrap(), coeff_int(0));

        // Hand computation: only ABC, BCA, CAB survive, each with trace 1.
        let a = int_matrix(&[&[0, 1], &[0, 0]]);
        let b = int_matrix(&[&[0, 0], &[1, 0]]);
        let c = int_matrix(&[&[1, 0], &[0, 0]]);
        assert_eq!(antisym_trace(&[a.clone(), b.clone(), c.clone()]).unwrap(), coeff_int(3));
        // Swapping two arguments flips the total.
        assert_eq!(antisym_trace(&[b, a, c]).unwrap(), coeff_int(-3));
    }

    #[test]
    fn antisym_trace_vanishes_beyond_twice_the_dimension() {
        // The standard identity: 2d or more 2×2 matrices antisymmetrize to zero.
        let mats = [
            int_matrix(&[&[1, 2], &[3, 4]]),
            int_matrix(&[&[0, 1], &[1, 1]]),
            int_matrix(&[&[2, 0], &[5, -1]]),
            int_matrix(&[&[-3, 1], &[0, 2]]),
            int_matrix(&[&[1, 1], &[4, 0]]),
        ];
        assert_eq!(antisym_trace(&mats[..4]).unwrap(), coeff_int(0));
        assert_eq!(antisym_trace(&mats).unwrap(), coeff_int(0));
    }

    #[test]
    fn wheel_trace_on_the_line_vanishes() {
        let v1 = pv(1, 1, &[(&[0], mono(1, &[1], 1))]);
        let v2 = pv(1, 1, &[(&[0], mono(1, &[2], 1))]);
        let v3 = pv(1, 1, &[(&[0], mono(1, &[0], 1))]);
        let out = wheel_trace_eval(1, &[v1, v2, v3]).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn wheel_trace_matches_the_wheel_cochain_on_vector_fields() {
        // Linear fields with Jacobians E₂₁, E₁₂, E₁₁: the antisymmetrized
        // trace of the reversed chains is the constant 3.
        let a1 = pv(2, 1, &[(&[1], mono(2, &[1, 0], 1))]);
        let a2 = pv(2, 1, &[(&[0], mono(2, &[0, 1], 1))]);
        let a3 = pv(2, 1, &[(&[0], mono(2, &[1, 0], 1))]);
        let args = [a1, a2, a3];
        let traced = wheel_trace_eval(1, &args).unwrap();
        let r3 = differential::wheel(3).unwrap();
        let summed = cochain_eval(&r3, &args).unwrap();
        assert_eq!(traced, PolyVector::scalar(2, Poly::constant(2, coeff_int(3))));
        assert_eq!(summed, traced);
    }

    #[test]
    fn wheel_trace_matches_the_wheel_cochain_on_bivectors() {
        // Order-2 arguments at d = 3: one hatted slot per block survives and
        // the leg shuffle sign on the graph side is −1.
        let b1 = pv(
            3,
            2,
            &[
                (&[0, 1], mono(3, &[2, 0, 0], 1)),
                (&[0, 2], mono(3, &[0, 1, 1], 1)),
                (&[1, 2], mono(3, &[0, 0, 2], 1)),
            ],
        );
        let b2 = pv(
            3,
            2,
            &[
                (&[0, 1], mono(3, &[0, 2, 0], 1)),
                (&[0, 2], mono(3, &[1, 1, 0], 1)),
                (&[1, 2], mono(3, &[2, 0, 0], 1)),
            ],
        );
        let b3 = pv(
            3,
            2,
            &[
                (&[0, 1], mono(3, &[1, 0, 1], 1)),
                (&[0, 2], mono(3, &[0, 2, 0], 1)),
                (&[1, 2], mono(3, &[0, 1, 1], 1)),
            ],
        );
        let args = [b1, b2, b3];
        let traced = wheel_trace_eval(1, &args).unwrap();
        let r3 = differential::wheel(3).unwrap();
        let summed = cochain_eval(&r3, &args).unwrap();
        assert!(!traced.is_zero());
        assert_eq!(summed, traced);
    }

    #[test]
    fn wheel_trace_of_bivectors_in_the_plane_is_the_zero_trivector() {
        // Three hatted legs cannot wedge inside d = 2.
        let b = pv(2, 2, &[(&[0, 1], mono(2, &[1, 1], 1))]);
        let args = [b.clone(), b.clone(), b];
        let traced = wheel_trace_eval(1, &args).unwrap();
        assert!(traced.is_zero());
        let summed = cochain_eval(&differential::wheel(3).unwrap(), &args).unwrap();
        assert!(summed.is_zero());
    }

    #[test]
    fn shape_errors_are_reported() {
        let point = g(&[&[]]);
        assert!(matches!(
            LeggedGraph::new(point.clone(), vec![0, 1]),
            Err(TensorError::ArityMismatch { expected: 1, got: 2 })
        ));
        let gamma = LeggedGraph::new(point, vec![1]).unwrap();
        let f = PolyVector::scalar(2, Poly::constant(2, coeff_int(1)));
        assert!(matches!(
            b_gamma(&gamma, std::slice::from_ref(&f)),
            Err(TensorError::OrderMismatch { vertex: 0, expected: 1, got: 0 })
        ));
        assert!(matches!(
            cochain_eval(&GraphSum::from_graph(g(&[&[]])), &[]),
            Err(TensorError::ArityMismatch { expected: 1, got: 0 })
        ));
        let v = pv(2, 1, &[(&[0], Poly::constant(2, coeff_int(1)))]);
        assert!(matches!(
            wheel_trace_eval(1, &[v.clone(), v.clone(), f]),
            Err(TensorError::UnequalOrders)
        ));
        assert!(matches!(
            wheel_trace_eval(1, &[v.clone(), v]),
            Err(TensorError::ArityMismatch { expected: 3, got: 2 })
        ));
        assert!(antisym_trace(&[]).is_err());
        let bad = vec![vec![coeff_int(1)], vec![coeff_int(2)]];
        assert!(antisym_trace(&[bad]).is_err());
    }
}
