//! Exact sparse linear algebra over ℚ.
//!
//! Matrices store only nonzero [`BigRational`] entries. Rank and kernel computations
//! integerize each row (clearing denominators) and run Bareiss fraction-free
//! elimination, so every intermediate value is an exact integer; linear solves run
//! rational Gaussian elimination on the augmented system. Pivoting is deterministic:
//! the remaining row with the smallest-magnitude leading entry wins, ties broken by
//! row index, so results are byte-stable across runs.
//!
//! The text interchange format is line-oriented and 1-based:
//!
//! ```text
//! rows cols nnz
//! r c p/q
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors from matrix construction, parsing, and shape checks.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinAlgError {
    /// Entry coordinates outside the declared shape.
    #[error("entry ({row}, {col}) outside a {rows}×{cols} matrix")]
    OutOfBounds { row: usize, col: usize, rows: usize, cols: usize },
    /// Vector length does not match the matrix shape.
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    /// Malformed text-format input.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A sparse matrix over ℚ with exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseRationalMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigRational>,
}

impl SparseRationalMatrix {
    /// The zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseRationalMatrix { rows, cols, entries: BTreeMap::new() }
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of stored nonzero entries.
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Sets entry (r, c); zero values erase the entry.
    pub fn set(&mut self, r: usize, c: usize, v: BigRational) -> Result<(), LinAlgError> {
        if r >= self.rows || c >= self.cols {
            return Err(LinAlgError::OutOfBounds { row: r, col: c, rows: self.rows, cols: self.cols });
        }
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
        Ok(())
    }

    /// Adds `v` into entry (r, c).
    pub fn add(&mut self, r: usize, c: usize, v: BigRational) -> Result<(), LinAlgError> {
        let cur = self.get(r, c);
        self.set(r, c, cur + v)
    }

    /// Entry (r, c), zero when absent.
    pub fn get(&self, r: usize, c: usize) -> BigRational {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Iterates nonzero entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    /// The transposed matrix.
    pub fn transpose(&self) -> SparseRationalMatrix {
        let mut t = SparseRationalMatrix::zero(self.cols, self.rows);
        for (r, c, v) in self.iter() {
            t.entries.insert((c, r), v.clone());
        }
        t
    }

    /// Matrix product `A·B`.
    pub fn mul(&self, other: &SparseRationalMatrix) -> Result<SparseRationalMatrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut by_row: Vec<Vec<(usize, &BigRational)>> = vec![Vec::new(); other.rows];
        for (r, c, v) in other.iter() {
            by_row[r].push((c, v));
        }
        let mut out = SparseRationalMatrix::zero(self.rows, other.cols);
        for (r, k, a) in self.iter() {
            for &(c, b) in &by_row[k] {
                out.add(r, c, a * b)?;
            }
        }
        Ok(out)
    }

    /// Matrix–vector product `A·x`.
    pub fn mul_vec(&self, x: &[BigRational]) -> Result<Vec<BigRational>, LinAlgError> {
        if x.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch { expected: self.cols, got: x.len() });
        }
        let mut out = vec![BigRational::zero(); self.rows];
        for (r, c, v) in self.iter() {
            if !x[c].is_zero() {
                out[r] += v * &x[c];
            }
        }
        Ok(out)
    }

    /// Rows as sparse integer maps: each row is scaled by the LCM of its denominators.
    fn integer_rows(&self) -> Vec<BTreeMap<usize, BigInt>> {
        let mut rows: Vec<BTreeMap<usize, BigRational>> = vec![BTreeMap::new(); self.rows];
        for (r, c, v) in self.iter() {
            rows[r].insert(c, v.clone());
        }
        rows.into_iter()
            .map(|row| {
                let mut lcm = BigInt::one();
                for v in row.values() {
                    lcm = num_integer::Integer::lcm(&lcm, v.denom());
                }
                row.into_iter()
                    .map(|(c, v)| {
                        let scaled = v * BigRational::from_integer(lcm.clone());
                        debug_assert!(scaled.denom().is_one());
                        (c, scaled.to_integer())
                    })
                    .collect()
            })
            .collect()
    }

    /// Rank over ℚ via fraction-free elimination.
    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// A basis of the right kernel {x : A·x = 0}. Each basis vector sets one free
    /// column to 1 and solves the pivot columns by exact back-substitution; vectors
    /// are returned in ascending free-column order.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let ech = self.echelon();
        let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
        let free_cols: Vec<usize> =
            (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = Vec::with_capacity(free_cols.len());
        for &f in &free_cols {
            let mut x = vec![BigRational::zero(); self.cols];
            x[f] = BigRational::one();
            // Echelon rows are ordered with increasing pivot columns; substitute bottom-up.
            for &(ri, pc) in ech.pivots.iter().rev() {
                let row = &ech.rows[ri];
                let mut acc = BigRational::zero();
                for (&c, v) in row {
                    if c != pc && !x[c].is_zero() {
                        acc += BigRational::from_integer(v.clone()) * &x[c];
                    }
                }
                let pivot = row.get(&pc).expect("pivot entry present");
                x[pc] = -acc / BigRational::from_integer(pivot.clone());
            }
            debug_assert!(self
                .mul_vec(&x)
                .expect("kernel vector has matching length")
                .iter()
                .all(Zero::is_zero));
            basis.push(x);
        }
        basis
    }

    /// Solves `A·x = b` exactly. Returns `None` when the system is inconsistent;
    /// free variables are set to zero, making the solution deterministic.
    pub fn solve(&self, b: &[BigRational]) -> Result<Option<Vec<BigRational>>, LinAlgError> {
        if b.len() != self.rows {
            return Err(LinAlgError::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        // Rational Gaussian elimination on the augmented system (dense rows are fine at
        // the scale of this complex; exactness is what matters).
        let mut rows: Vec<BTreeMap<usize, BigRational>> = vec![BTreeMap::new(); self.rows];
        for (r, c, v) in self.iter() {
            rows[r].insert(c, v.clone());
        }
        let mut rhs: Vec<BigRational> = b.to_vec();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut next_row = 0usize;
        for col in 0..self.cols {
            // Deterministic pivot: smallest |numerator|·|denominator|, then row index.
            let mut best: Option<(usize, BigInt)> = None;
            for (r, row) in rows.iter().enumerate().skip(next_row) {
                if let Some(v) = row.get(&col) {
                    if !v.is_zero() {
                        let size = v.numer().abs() * v.denom().abs();
                        match &best {
                            Some((_, s)) if *s <= size => {}
                            _ => best = Some((r, size)),
                        }
                    }
                }
            }
            let Some((prow, _)) = best else { continue };
            rows.swap(next_row, prow);
            rhs.swap(next_row, prow);
            let pivot = rows[next_row].get(&col).cloned().expect("pivot nonzero");
            let prow_entries = rows[next_row].clone();
            let prhs = rhs[next_row].clone();
            for r in next_row + 1..self.rows {
                let Some(factor) = rows[r].get(&col).cloned() else { continue };
                if factor.is_zero() {
                    continue;
                }
                let scale = factor / &pivot;
                for (&c, v) in &prow_entries {
                    let cur = rows[r].get(&c).cloned().unwrap_or_else(BigRational::zero);
                    let nv = cur - &scale * v;
                    if nv.is_zero() {
                        rows[r].remove(&c);
                    } else {
                        rows[r].insert(c, nv);
                    }
                }
                rhs[r] = &rhs[r] - &scale * &prhs;
            }
            pivots.push((next_row, col));
            next_row += 1;
            if next_row == self.rows {
                break;
            }
        }
        // Inconsistent when a zeroed row keeps a nonzero right-hand side.
        for r in next_row..self.rows {
            if rows[r].values().any(|v| !v.is_zero()) {
                unreachable!("rows below the pivot block are fully eliminated");
            }
            if !rhs[r].is_zero() {
                return Ok(None);
            }
        }
        let mut x = vec![BigRational::zero(); self.cols];
        for &(ri, pc) in pivots.iter().rev() {
            let mut acc = rhs[ri].clone();
            for (&c, v) in &rows[ri] {
                if c != pc && !x[c].is_zero() {
                    acc -= v * &x[c];
                }
            }
            let pivot = rows[ri].get(&pc).expect("pivot entry present");
            x[pc] = acc / pivot;
        }
        debug_assert_eq!(self.mul_vec(&x)?, b.to_vec());
        Ok(Some(x))
    }

    /// Bareiss fraction-free echelon form of the integerized rows.
    fn echelon(&self) -> Echelon {
        let mut rows = self.integer_rows();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut prev_pivot = BigInt::one();
        let mut next_row = 0usize;
        for col in 0..self.cols {
            // Deterministic pivot choice: smallest |entry|, ties by row index.
            let mut best: Option<(usize, BigInt)> = None;
            for (r, row) in rows.iter().enumerate().skip(next_row) {
                if let Some(v) = row.get(&col) {
                    if !v.is_zero() {
                        let size = v.abs();
                        match &best {
                            Some((_, s)) if *s <= size => {}
                            _ => best = Some((r, size)),
                        }
                    }
                }
            }
            let Some((prow, _)) = best else { continue };
            rows.swap(next_row, prow);
            let pivot = rows[next_row].get(&col).cloned().expect("pivot nonzero");
            let pivot_row = rows[next_row].clone();
            for row in rows.iter_mut().skip(next_row + 1) {
                let factor = row.get(&col).cloned().unwrap_or_else(BigInt::zero);
                if factor.is_zero() && pivot.is_one() && prev_pivot.is_one() {
                    continue;
                }
                // Bareiss step: row ← (pivot·row − factor·pivot_row) / prev_pivot.
                let cols: std::collections::BTreeSet<usize> =
                    row.keys().chain(pivot_row.keys()).copied().collect();
                for c in cols {
                    let a = row.get(&c).cloned().unwrap_or_else(BigInt::zero);
                    let b = pivot_row.get(&c).cloned().unwrap_or_else(BigInt::zero);
                    let num = &pivot * a - &factor * b;
                    debug_assert!((&num % &prev_pivot).is_zero(), "Bareiss divisibility");
                    let nv = num / &prev_pivot;
                    if nv.is_zero() {
                        row.remove(&c);
                    } else {
                        row.insert(c, nv);
                    }
                }
                debug_assert!(!row.contains_key(&col), "eliminated column must vanish");
            }
            pivots.push((next_row, col));
            prev_pivot = pivot;
            next_row += 1;
            if next_row == self.rows {
                break;
            }
        }
        Echelon { rows, pivots }
    }

    /// Renders the 1-based text format (header line, then row-major entries).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {} {}", self.rows, self.cols, self.nnz()).expect("write to string");
        for (r, c, v) in self.iter() {
            let val = if v.denom().is_one() {
                v.numer().to_string()
            } else {
                format!("{}/{}", v.numer(), v.denom())
            };
            writeln!(out, "{} {} {}", r + 1, c + 1, val).expect("write to string");
        }
        out
    }

    /// Parses the 1-based text format.
    pub fn from_text(s: &str) -> Result<Self, LinAlgError> {
        let mut lines = s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (ln, header) = lines
            .next()
            .ok_or_else(|| LinAlgError::Parse { line: 1, message: "empty input".into() })?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(LinAlgError::Parse {
                line: ln + 1,
                message: "expected `rows cols nnz`".into(),
            });
        }
        let parse_usize = |s: &str, line: usize| {
            s.parse::<usize>().map_err(|e| LinAlgError::Parse { line, message: e.to_string() })
        };
        let rows = parse_usize(parts[0], ln + 1)?;
        let cols = parse_usize(parts[1], ln + 1)?;
        let nnz = parse_usize(parts[2], ln + 1)?;
        let mut m = SparseRationalMatrix::zero(rows, cols);
        let mut count = 0usize;
        for (ln, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(LinAlgError::Parse {
                    line: ln + 1,
                    message: "expected `row col value`".into(),
                });
            }
            let r = parse_usize(parts[0], ln + 1)?;
            let c = parse_usize(parts[1], ln + 1)?;
            if r == 0 || c == 0 {
                return Err(LinAlgError::Parse {
                    line: ln + 1,
                    message: "indices are 1-based".into(),
                });
            }
            let v = parse_rational(parts[2]).ok_or_else(|| LinAlgError::Parse {
                line: ln + 1,
                message: format!("invalid rational {:?}", parts[2]),
            })?;
            m.set(r - 1, c - 1, v)?;
            count += 1;
        }
        if count != nnz {
            return Err(LinAlgError::Parse {
                line: 1,
                message: format!("header declares {nnz} entries, found {count}"),
            });
        }
        Ok(m)
    }
}

struct Echelon {
    rows: Vec<BTreeMap<usize, BigInt>>,
    pivots: Vec<(usize, usize)>,
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn from_dense(rows: &[&[i64]]) -> SparseRationalMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = SparseRationalMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, q(v, 1)).unwrap();
            }
        }
        m
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(SparseRationalMatrix::zero(3, 4).rank(), 0);
        assert_eq!(from_dense(&[&[1, 0], &[0, 1]]).rank(), 2);
        assert_eq!(from_dense(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(from_dense(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).rank(), 2);
    }

    #[test]
    fn matrix_product_matches_hand_computation() {
        let a = from_dense(&[&[1, 2], &[3, 4]]);
        let b = from_dense(&[&[5, 6], &[7, 8]]);
        let p = a.mul(&b).unwrap();
        assert_eq!(p.get(0, 0), q(19, 1));
        assert_eq!(p.get(0, 1), q(22, 1));
        assert_eq!(p.get(1, 0), q(43, 1));
        assert_eq!(p.get(1, 1), q(50, 1));
        assert!(a.mul(&SparseRationalMatrix::zero(3, 3)).is_err());
        let z = a.mul(&SparseRationalMatrix::zero(2, 5)).unwrap();
        assert_eq!((z.rows(), z.cols(), z.nnz()), (2, 5, 0));
    }

    #[test]
    fn rank_respects_rational_entries() {
        let mut m = SparseRationalMatrix::zero(2, 2);
        m.set(0, 0, q(1, 2)).unwrap();
        m.set(0, 1, q(1, 3)).unwrap();
        m.set(1, 0, q(3, 2)).unwrap();
        m.set(1, 1, q(1, 1)).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_annihilates() {
        let m = from_dense(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        for v in &k {
            assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
        // The classical kernel direction, normalized with the free column at 1.
        assert_eq!(k[0], vec![q(1, 1), q(-2, 1), q(1, 1)]);
    }

    #[test]
    fn rank_plus_nullity_is_cols() {
        let m = from_dense(&[&[0, 1, 0, 2], &[0, 0, 0, 0], &[1, 1, 1, 1]]);
        assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = from_dense(&[&[2, 1], &[1, 3]]);
        let b = vec![q(5, 1), q(10, 1)];
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), b);
        assert_eq!(x, vec![q(1, 1), q(3, 1)]);

        let singular = from_dense(&[&[1, 2], &[2, 4]]);
        assert!(singular.solve(&[q(1, 1), q(3, 1)]).unwrap().is_none());
        let sol = singular.solve(&[q(1, 1), q(2, 1)]).unwrap().unwrap();
        assert_eq!(singular.mul_vec(&sol).unwrap(), vec![q(1, 1), q(2, 1)]);
    }

    #[test]
    fn rank_is_transpose_invariant() {
        let m = from_dense(&[&[1, 2, 3], &[0, 0, 1]]);
        assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn text_round_trip() {
        let mut m = SparseRationalMatrix::zero(2, 3);
        m.set(0, 0, q(1, 2)).unwrap();
        m.set(1, 2, q(-3, 1)).unwrap();
        let text = m.to_text();
        assert_eq!(text, "2 3 2\n1 1 1/2\n2 3 -3\n");
        assert_eq!(SparseRationalMatrix::from_text(&text).unwrap(), m);
        assert!(SparseRationalMatrix::from_text("1 1 1\n0 1 5").is_err());
        assert!(SparseRationalMatrix::from_text("1 1 2\n1 1 5").is_err());
    }
}
