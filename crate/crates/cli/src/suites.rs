//! Verification suites behind `chevgc verify` and `chevgc oracle`.
//!
//! Every suite recomputes both sides of its identity from scratch, draws all
//! randomness from seeded ChaCha streams, prints one `ok:` line per law it has
//! established, and stops at the first counterexample, reported as a single
//! JSON object that includes the trial seed needed to reproduce the draw.

use cohomology::{enumerate_basis, Mode};
use differential::{
    a_coefficient, coboundary, cycle_graph, homotopy, homotopy_sum, sum_order, symbol, wheel,
};
use graph_core::{
    coeff_int, coeff_to_string, symmetrize, AerialGraph, Coefficient, GraphSum, TypePolicy,
};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use tensor_oracle::{
    antisym_trace, chevalley_coboundary_eval, cochain_eval, is_ascending_tensor,
    random_ascending_tensor, schouten, wheel_trace_eval, Poly, PolyVector, RatMatrix, TensorError,
};

/// How a suite run can end short of success.
pub enum SuiteError {
    /// The request itself is unusable (bad sizes, impossible flags): exit 2.
    Input(String),
    /// A law failed; the value is the first counterexample: exit 1.
    Counterexample(Value),
}

pub type SuiteResult = Result<(), SuiteError>;

fn input(msg: impl ToString) -> SuiteError {
    SuiteError::Input(msg.to_string())
}

fn tensor(e: TensorError) -> SuiteError {
    SuiteError::Input(e.to_string())
}

/// A graph sum as a JSON value, for counterexample reports.
fn sum_value(s: &GraphSum) -> Value {
    serde_json::from_str(&s.to_json()).expect("sum JSON is valid")
}

/// Deterministic per-trial seed derived from the master seed and coordinates
/// (FNV-style fold); reported verbatim in failure records.
fn trial_seed(master: u64, salt: &[u64]) -> u64 {
    let mut s = master ^ 0xCBF2_9CE4_8422_2325;
    for &x in salt {
        s = s.wrapping_mul(0x0000_0100_0000_01B3).wrapping_add(x.wrapping_add(1));
    }
    s
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::ExcludeIsolated => "exclude",
        Mode::IncludeIsolated => "include",
    }
}

/// ∂∘∂ = 0 on every basis representative with at most `nmax` vertices, in both
/// isolated-vertex modes.
pub fn d_squared(nmax: usize, policy: TypePolicy) -> SuiteResult {
    if nmax == 0 || nmax > 6 {
        return Err(input("--n must be between 1 and 6 for the d-squared suite"));
    }
    let mut total = 0usize;
    for n in 1..=nmax {
        for mode in [Mode::ExcludeIsolated, Mode::IncludeIsolated] {
            let slice = enumerate_basis(n, policy, mode).map_err(input)?;
            for rep in slice.reps() {
                let once = coboundary(rep, policy);
                let twice = coboundary(&once, policy);
                if !twice.is_empty() {
                    return Err(SuiteError::Counterexample(json!({
                        "suite": "d-squared",
                        "n": n,
                        "isolated": mode_name(mode),
                        "representative": sum_value(rep),
                        "d_squared": sum_value(&twice),
                    })));
                }
                total += 1;
            }
        }
    }
    println!("ok: d-squared vanishes on {total} representatives (n <= {nmax}, both isolated modes)");
    Ok(())
}

/// σ of a possibly empty sum, with σ(0) = 0.
fn symbol_or_zero(s: &GraphSum) -> Result<GraphSum, SuiteError> {
    if s.is_empty() {
        Ok(GraphSum::empty(s.n()))
    } else {
        symbol(s).map_err(input)
    }
}

/// The reduction identity h(σ_{∂δ}) = σ(∂h(σ_δ)) + a·σ_δ with both sides
/// recomputed independently.
fn reduction_identity(delta: &GraphSum, policy: TypePolicy) -> SuiteResult {
    let d_delta = coboundary(delta, policy);
    let lhs = homotopy_sum(&symbol_or_zero(&d_delta)?);

    let sigma = symbol_or_zero(delta)?;
    let h_sigma = homotopy_sum(&sigma);
    let mut rhs = symbol_or_zero(&coboundary(&h_sigma, policy))?;
    let order = sum_order(delta).ok_or_else(|| input("reduction identity needs a nonzero sum"))?;
    let a = a_coefficient(&order).map_err(input)?;
    if !a.is_zero() {
        rhs.add_assign(&sigma.scaled(&a)).map_err(input)?;
    }

    if lhs == rhs {
        Ok(())
    } else {
        Err(SuiteError::Counterexample(json!({
            "suite": "homotopy",
            "law": "reduction identity",
            "input": sum_value(delta),
            "lhs": sum_value(&lhs),
            "rhs": sum_value(&rhs),
        })))
    }
}

/// Admissible ascending generators whose symmetrizations span the slices n ≤ 3.
fn ascending_generators(n: usize) -> Vec<AerialGraph> {
    let g = |deb: &[&[usize]]| {
        AerialGraph::new(deb.iter().map(|l| l.to_vec()).collect()).expect("valid generator")
    };
    match n {
        1 => vec![g(&[&[]]), g(&[&[0]])],
        2 => vec![g(&[&[], &[]]), g(&[&[0], &[]]), g(&[&[1], &[0]]), g(&[&[0], &[1]])],
        3 => vec![
            g(&[&[], &[], &[]]),
            g(&[&[0], &[], &[]]),
            g(&[&[0], &[1], &[]]),
            g(&[&[0], &[1], &[2]]),
            g(&[&[1], &[0], &[]]),
            g(&[&[0], &[2], &[1]]),
            g(&[&[1], &[2], &[0]]),
            g(&[&[2], &[0], &[1]]),
        ],
        _ => Vec::new(),
    }
}

/// The contraction homotopy: the cycle ladder Δ_k → Δ_{k−1}, vanishing on
/// all-isolated graphs, and the reduction identity on ascending symmetric
/// combinations through three vertices.
pub fn homotopy_suite(nmax: usize) -> SuiteResult {
    if nmax == 0 {
        return Err(input("--n must be at least 1 for the homotopy suite"));
    }
    for k in [2usize, 3, 4] {
        let ck = cycle_graph(k).map_err(input)?;
        let expected = cycle_graph(k - 1).map_err(input)?;
        match homotopy(&ck) {
            Some((h, _sign)) if h == expected => {}
            other => {
                return Err(SuiteError::Counterexample(json!({
                    "suite": "homotopy",
                    "law": "cycle contraction",
                    "k": k,
                    "got": format!("{other:?}"),
                })));
            }
        }
    }
    println!("ok: cycle contraction sends the k-cycle to the (k-1)-cycle for k = 2, 3, 4");

    for n in 1..=nmax.min(4) {
        if homotopy(&AerialGraph::empty(n)).is_some() {
            return Err(SuiteError::Counterexample(json!({
                "suite": "homotopy",
                "law": "all-isolated vanishing",
                "n": n,
            })));
        }
    }
    println!("ok: all-isolated graphs contract to zero (n <= {})", nmax.min(4));

    let policy = TypePolicy::Ascending;
    let mut checked = 0usize;
    for n in 1..=nmax.min(3) {
        for generator in ascending_generators(n) {
            let delta = symmetrize(&generator);
            if delta.is_empty() {
                continue;
            }
            reduction_identity(&delta, policy)?;
            checked += 1;
        }
    }
    // Mixed orders in one sum exercise the symbol extraction nontrivially.
    if nmax >= 3 {
        let r3 = wheel(3).map_err(input)?;
        let loops = symmetrize(
            &AerialGraph::new(vec![vec![0], vec![], vec![]]).expect("valid generator"),
        );
        let mut mixed = r3;
        mixed.add_assign(&loops.scaled(&coeff_int(2))).map_err(input)?;
        reduction_identity(&mixed, policy)?;
        checked += 1;
    }
    println!("ok: reduction identity on {} ascending symmetric combinations (n <= {})", checked, nmax.min(3));
    Ok(())
}

fn sgn(exponent: usize) -> Coefficient {
    coeff_int(if exponent.is_multiple_of(2) { 1 } else { -1 })
}

/// Graded antisymmetry, graded Jacobi, and ascending closure of the Schouten
/// bracket on seeded random tensors (orders ≤ 3).
pub fn schouten_suite(trials: usize, seed: u64, dim: Option<usize>) -> SuiteResult {
    if trials == 0 {
        return Err(input("--trials must be at least 1"));
    }
    if dim == Some(0) {
        return Err(input("--dim must be at least 1"));
    }
    for t in 0..trials {
        let ts = trial_seed(seed, &[t as u64]);
        let mut rng = ChaCha8Rng::seed_from_u64(ts);
        let d = dim.unwrap_or_else(|| rng.gen_range(2..=3));
        let draw = |rng: &mut ChaCha8Rng| random_ascending_tensor(d, rng.gen_range(1..=3), 3, rng.gen());
        let (a, b, c) = (draw(&mut rng), draw(&mut rng), draw(&mut rng));
        let fail = |law: &str| {
            SuiteError::Counterexample(json!({
                "suite": "schouten",
                "law": law,
                "trial": t,
                "seed": ts,
                "d": d,
                "orders": [a.order(), b.order(), c.order()],
            }))
        };

        // [α,β] = −(−1)^{(pα+1)(pβ+1)}[β,α] in shifted degrees pα − 1, pβ − 1.
        let lhs = schouten(&a, &b).map_err(tensor)?;
        let rhs = schouten(&b, &a).map_err(tensor)?.scale(&sgn((a.order() + 1) * (b.order() + 1) + 1));
        if lhs != rhs {
            return Err(fail("graded antisymmetry"));
        }

        // Σ_cyc (−1)^{(pα+1)(pγ+1)} [[α,β],γ] = 0.
        let term = |x: &PolyVector, y: &PolyVector, z: &PolyVector| -> Result<PolyVector, SuiteError> {
            let coef = sgn((x.order() + 1) * (z.order() + 1));
            Ok(schouten(&schouten(x, y).map_err(tensor)?, z).map_err(tensor)?.scale(&coef))
        };
        let total = term(&a, &b, &c)?
            .add(&term(&b, &c, &a)?)
            .map_err(tensor)?
            .add(&term(&c, &a, &b)?)
            .map_err(tensor)?;
        if !total.is_zero() {
            return Err(fail("graded Jacobi"));
        }

        // The bracket of ascending tensors is ascending.
        if !is_ascending_tensor(&lhs).map_err(tensor)? {
            return Err(fail("ascending closure"));
        }
    }
    println!("ok: graded antisymmetry on {trials} seeded pairs");
    println!("ok: graded Jacobi on {trials} seeded triples");
    println!("ok: ascending closure on {trials} seeded brackets");
    Ok(())
}

/// The four cochain classes whose graph coboundary the tensor oracle replays.
fn correspondence_cases() -> Result<Vec<(&'static str, GraphSum)>, SuiteError> {
    let g = |deb: Vec<Vec<usize>>| AerialGraph::new(deb).expect("valid case graph");
    Ok(vec![
        ("symmetrized point", symmetrize(&g(vec![vec![]]))),
        ("1-wheel", wheel(1).map_err(input)?),
        ("symmetrized loop plus point", symmetrize(&g(vec![vec![0], vec![]]))),
        ("3-wheel", wheel(3).map_err(input)?),
    ])
}

fn correspondence_dims(dim: Option<usize>) -> Result<Vec<usize>, SuiteError> {
    match dim {
        None => Ok(vec![2, 3]),
        Some(0) => Err(input("--dim must be at least 1")),
        Some(d) => Ok(vec![d]),
    }
}

/// Graph–tensor correspondence: evaluating the graph coboundary as a cochain
/// equals the graded Chevalley differential of the cochain, exactly, on seeded
/// random ascending argument tuples.
pub fn correspondence(trials: usize, seed: u64, dim: Option<usize>) -> SuiteResult {
    if trials == 0 {
        return Err(input("--trials must be at least 1"));
    }
    let dims = correspondence_dims(dim)?;
    for (ci, (name, delta)) in correspondence_cases()?.into_iter().enumerate() {
        let image = coboundary(&delta, TypePolicy::Ascending);
        for &d in &dims {
            for t in 0..trials {
                let ts = trial_seed(seed, &[ci as u64, d as u64, t as u64]);
                let mut rng = ChaCha8Rng::seed_from_u64(ts);
                let args: Vec<PolyVector> = (0..=delta.n())
                    .map(|_| random_ascending_tensor(d, rng.gen_range(0..=2), 2, rng.gen()))
                    .collect();
                let tensor_side = chevalley_coboundary_eval(&delta, &args).map_err(tensor)?;
                let graph_side = cochain_eval(&image, &args).map_err(tensor)?;
                if tensor_side != graph_side {
                    return Err(SuiteError::Counterexample(json!({
                        "suite": "correspondence",
                        "case": name,
                        "d": d,
                        "trial": t,
                        "seed": ts,
                        "orders": args.iter().map(PolyVector::order).collect::<Vec<_>>(),
                    })));
                }
            }
        }
        println!(
            "ok: {name}: coboundary evaluation matches the Chevalley differential ({} tuples)",
            dims.len() * trials
        );
    }
    Ok(())
}

fn random_matrix(d: usize, rng: &mut ChaCha8Rng) -> RatMatrix {
    (0..d).map(|_| (0..d).map(|_| coeff_int(rng.gen_range(-5..=5))).collect()).collect()
}

fn matrix_value(m: &RatMatrix) -> Value {
    Value::Array(
        m.iter()
            .map(|row| Value::Array(row.iter().map(|c| Value::String(coeff_to_string(c))).collect()))
            .collect(),
    )
}

/// Trace identity: the fully antisymmetrized trace of `length` random d×d
/// matrices vanishes identically once length ≥ 2d, and is generically nonzero
/// below that threshold.
pub fn amitsur_levitzki(dim: usize, length: usize, trials: usize, seed: u64) -> SuiteResult {
    if dim == 0 || length == 0 || trials == 0 {
        return Err(input("--dim, --length and --trials must all be at least 1"));
    }
    if length > 8 {
        return Err(input("--length above 8 makes the permutation sum impractical"));
    }
    let vanishes = length >= 2 * dim;
    let mut nonzero_seen = false;
    for t in 0..trials {
        let ts = trial_seed(seed, &[t as u64]);
        let mut rng = ChaCha8Rng::seed_from_u64(ts);
        let mats: Vec<RatMatrix> = (0..length).map(|_| random_matrix(dim, &mut rng)).collect();
        let value = antisym_trace(&mats).map_err(tensor)?;
        if vanishes && !value.is_zero() {
            return Err(SuiteError::Counterexample(json!({
                "suite": "amitsur-levitzki",
                "dim": dim,
                "length": length,
                "trial": t,
                "seed": ts,
                "value": coeff_to_string(&value),
                "matrices": mats.iter().map(matrix_value).collect::<Vec<_>>(),
            })));
        }
        nonzero_seen |= !value.is_zero();
    }
    if vanishes {
        println!(
            "ok: antisymmetrized trace of {length} random {dim}x{dim} matrices vanished in all {trials} trials"
        );
    } else if nonzero_seen {
        println!(
            "ok: below the vanishing threshold ({length} < {}): nonzero antisymmetrized trace observed",
            2 * dim
        );
    } else {
        return Err(SuiteError::Counterexample(json!({
            "suite": "amitsur-levitzki",
            "dim": dim,
            "length": length,
            "trials": trials,
            "seed": seed,
            "expected": "at least one nonzero trace below the vanishing threshold",
        })));
    }
    Ok(())
}

/// Wheel classes: even wheels die under symmetrization, odd wheels are cocycles.
pub fn wheels_suite() -> SuiteResult {
    for k in [2usize, 4] {
        let w = wheel(k).map_err(input)?;
        if !w.is_empty() {
            return Err(SuiteError::Counterexample(json!({
                "suite": "wheels",
                "law": "even vanishing",
                "k": k,
                "wheel": sum_value(&w),
            })));
        }
    }
    println!("ok: even wheels vanish under symmetrization (k = 2, 4)");
    for k in [1usize, 3, 5] {
        let w = wheel(k).map_err(input)?;
        let image = coboundary(&w, TypePolicy::Ascending);
        if !image.is_empty() {
            return Err(SuiteError::Counterexample(json!({
                "suite": "wheels",
                "law": "odd cocycle",
                "k": k,
                "coboundary": sum_value(&image),
            })));
        }
    }
    println!("ok: odd wheels are cocycles (k = 1, 3, 5)");
    Ok(())
}

/// Both wheel evaluators — graph summation and antisymmetrized Jacobian
/// traces — on seeded vector-field triples in the plane.
fn dual_wheel(trials: usize, seed: u64) -> SuiteResult {
    let r3 = wheel(3).map_err(input)?;
    for t in 0..trials {
        let ts = trial_seed(seed, &[0xD0A1, t as u64]);
        let mut rng = ChaCha8Rng::seed_from_u64(ts);
        let args: Vec<PolyVector> =
            (0..3).map(|_| random_ascending_tensor(2, 1, 1, rng.gen())).collect();
        let traced = wheel_trace_eval(1, &args).map_err(tensor)?;
        let summed = cochain_eval(&r3, &args).map_err(tensor)?;
        if traced != summed {
            return Err(SuiteError::Counterexample(json!({
                "suite": "oracle",
                "law": "dual wheel evaluators",
                "trial": t,
                "seed": ts,
            })));
        }
    }
    println!("ok: trace evaluator matches graph summation on {trials} vector-field triples");
    Ok(())
}

/// Full oracle concordance: the correspondence suite, the dual wheel
/// evaluators, and the divergence anchor pinning the 1-wheel normalization.
pub fn oracle(trials: usize, seed: u64, dim: Option<usize>) -> SuiteResult {
    correspondence(trials, seed, dim)?;
    dual_wheel(trials, seed)?;

    // C_{R₁} is the divergence: on the Euler-type field x¹∂₁ it returns 1.
    let r1 = wheel(1).map_err(input)?;
    let mut euler = PolyVector::zero(2, 1);
    euler.add_wedge_term(&[0], Poly::monomial(2, vec![1, 0], coeff_int(1)));
    let value = cochain_eval(&r1, &[euler]).map_err(tensor)?;
    let one = PolyVector::scalar(2, Poly::constant(2, coeff_int(1)));
    if value != one {
        return Err(SuiteError::Counterexample(json!({
            "suite": "oracle",
            "law": "divergence anchor",
            "expected": "1",
        })));
    }
    println!("ok: the 1-wheel cochain is the divergence (value 1 on the Euler field)");
    Ok(())
}
