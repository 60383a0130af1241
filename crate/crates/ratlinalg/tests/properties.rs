//! Property tests: exactness invariants of rank, kernel, and solve.

use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use ratlinalg::SparseRationalMatrix;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Small random matrices with rational entries of modest height.
fn arb_matrix() -> impl Strategy<Value = SparseRationalMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        proptest::collection::vec((-6i64..=6, 1i64..=3), r * c).prop_map(move |vals| {
            let mut m = SparseRationalMatrix::zero(r, c);
            for (k, (num, den)) in vals.into_iter().enumerate() {
                m.set(k / c, k % c, q(num, den)).unwrap();
            }
            m
        })
    })
}

proptest! {
    /// rank(A) = rank(Aᵀ).
    #[test]
    fn rank_transpose(m in arb_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    /// rank + nullity = number of columns, and every kernel vector annihilates.
    #[test]
    fn rank_nullity_and_kernel(m in arb_matrix()) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            let y = m.mul_vec(v).unwrap();
            prop_assert!(y.iter().all(Zero::is_zero));
        }
    }

    /// A·x = b from a known x is always solvable, and the returned solution verifies.
    #[test]
    fn solve_round_trip(m in arb_matrix(), xs in proptest::collection::vec(-4i64..=4, 0..=5)) {
        let x: Vec<BigRational> =
            (0..m.cols()).map(|i| q(xs.get(i).copied().unwrap_or(1), 1)).collect();
        let b = m.mul_vec(&x).unwrap();
        let sol = m.solve(&b).unwrap().expect("constructed system is consistent");
        prop_assert_eq!(m.mul_vec(&sol).unwrap(), b);
    }

    /// Text round-trips preserve the matrix exactly.
    #[test]
    fn text_round_trip(m in arb_matrix()) {
        let back = SparseRationalMatrix::from_text(&m.to_text()).unwrap();
        prop_assert_eq!(back, m);
    }
}
