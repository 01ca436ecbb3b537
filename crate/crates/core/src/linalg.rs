//! Big-integer linear algebra: Bareiss determinants, rank over the
//! rationals, row-style Hermite normal form and lattice membership.

use alloc::format;
use alloc::vec::Vec;
use core::mem;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Rectangular matrix of arbitrary-precision integers, stored by rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: Vec<Vec<BigInt>>,
    cols: usize,
}

impl IntegerMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some((k, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::Shape(format!("row {k} has {} entries, expected {cols}", r.len())));
        }
        Ok(IntegerMatrix { rows, cols })
    }

    /// Matrix with no rows and `cols` columns.
    pub fn empty(cols: usize) -> Self {
        IntegerMatrix { rows: Vec::new(), cols }
    }

    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.as_ref().iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    pub fn from_u32_rows<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.as_ref().iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        let rows =
            (0..n).map(|r| (0..n).map(|c| if r == c { BigInt::one() } else { BigInt::zero() }).collect()).collect();
        IntegerMatrix { rows, cols: n }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_determinant(m: &IntegerMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Shape(format!("determinant of a {}x{} matrix", m.nrows(), m.ncols())));
    }
    let n = m.nrows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.rows.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for r in k + 1..n {
            for c in k + 1..n {
                let v = &a[r][c] * &a[k][k] - &a[r][k] * &a[k][c];
                // exact by Sylvester's identity
                a[r][c] = v / &prev;
            }
            a[r][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

/// Rank over the rationals, via fraction-free elimination.
// row operations read one row while writing another
#[allow(clippy::needless_range_loop)]
pub fn integer_rank(m: &IntegerMatrix) -> usize {
    let mut a = m.rows.clone();
    let (nrows, ncols) = (a.len(), m.cols);
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..nrows {
            if a[r][c].is_zero() {
                continue;
            }
            let g = a[rank][c].gcd(&a[r][c]);
            let fr = &a[r][c] / &g;
            let fp = &a[rank][c] / &g;
            for k in c..ncols {
                let v = &a[r][k] * &fp - &a[rank][k] * &fr;
                a[r][k] = v;
            }
        }
        rank += 1;
    }
    rank
}

/// Row-style Hermite normal form basis of a sublattice of `Z^dim`.
///
/// Rows are linearly independent, pivot columns strictly increase, pivots
/// are positive and every entry above a pivot lies in `[0, pivot)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    // nonzero entries right of each pivot, for sparse back-substitution
    tails: Vec<Vec<(usize, BigInt)>>,
}

impl LatticeBasis {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn as_matrix(&self) -> IntegerMatrix {
        IntegerMatrix { rows: self.rows.clone(), cols: self.dim }
    }

    fn from_reduced(dim: usize, rows: Vec<Vec<BigInt>>, pivots: Vec<usize>) -> Self {
        let tails = rows
            .iter()
            .zip(&pivots)
            .map(|(row, &p)| (p + 1..dim).filter(|&c| !row[c].is_zero()).map(|c| (c, row[c].clone())).collect())
            .collect();
        LatticeBasis { dim, rows, pivots, tails }
    }
}

/// Hermite normal form basis of the lattice spanned by `vectors` in `Z^dim`.
#[allow(clippy::needless_range_loop)]
pub fn hermite_basis(dim: usize, vectors: &[Vec<BigInt>]) -> Result<LatticeBasis> {
    if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
        return Err(Error::Shape(format!("vector of length {} in dimension {dim}", v.len())));
    }
    let mut work: Vec<Vec<BigInt>> = vectors.iter().filter(|v| v.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut pivots = Vec::new();
    for c in 0..dim {
        // Euclid on column c across the remaining rows.
        loop {
            let mut best: Option<usize> = None;
            for (r, row) in work.iter().enumerate() {
                if row[c].is_zero() {
                    continue;
                }
                if best.is_none_or(|b| row[c].abs() < work[b][c].abs()) {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            let pivot_row = work.swap_remove(b);
            let mut others_nonzero = false;
            for row in work.iter_mut() {
                if row[c].is_zero() {
                    continue;
                }
                let q = row[c].div_floor(&pivot_row[c]);
                for k in c..dim {
                    let v = &row[k] - &q * &pivot_row[k];
                    row[k] = v;
                }
                if !row[c].is_zero() {
                    others_nonzero = true;
                }
            }
            if others_nonzero {
                work.push(pivot_row);
                continue;
            }
            let mut pivot_row = pivot_row;
            if pivot_row[c].is_negative() {
                for x in pivot_row.iter_mut() {
                    *x = -mem::take(x);
                }
            }
            work.retain(|row| row.iter().any(|x| !x.is_zero()));
            rows.push(pivot_row);
            pivots.push(c);
            break;
        }
    }
    // Reduce entries above each pivot into [0, pivot).
    for k in 0..rows.len() {
        let c = pivots[k];
        for above in 0..k {
            let q = rows[above][c].div_floor(&rows[k][c]);
            if q.is_zero() {
                continue;
            }
            for col in c..dim {
                let v = &rows[above][col] - &q * &rows[k][col];
                rows[above][col] = v;
            }
        }
    }
    Ok(LatticeBasis::from_reduced(dim, rows, pivots))
}

/// Whether `x` is an integer combination of the basis rows.
pub fn lattice_contains(basis: &LatticeBasis, x: &[BigInt]) -> Result<bool> {
    if x.len() != basis.dim {
        return Err(Error::Shape(format!("vector of length {} against lattice in dimension {}", x.len(), basis.dim)));
    }
    let mut residual = x.to_vec();
    let mut next_col = 0;
    for (k, &c) in basis.pivots.iter().enumerate() {
        if residual[next_col..c].iter().any(|v| !v.is_zero()) {
            return Ok(false);
        }
        next_col = c + 1;
        if residual[c].is_zero() {
            continue;
        }
        let (q, rem) = residual[c].div_rem(&basis.rows[k][c]);
        if !rem.is_zero() {
            return Ok(false);
        }
        residual[c] = BigInt::zero();
        for (col, v) in &basis.tails[k] {
            residual[*col] -= &q * v;
        }
    }
    Ok(residual[next_col..].iter().all(|v| v.is_zero()))
}

/// Converts a `u32` vector into big integers.
pub fn to_bigint_vec(v: &[u32]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_i64_rows(rows).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn cofactor_det(a: &[Vec<i64>]) -> i64 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        if n == 1 {
            return a[0][0];
        }
        (0..n)
            .map(|c| {
                let minor: Vec<Vec<i64>> = a[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &v)| v).collect())
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * a[0][c] * cofactor_det(&minor)
            })
            .sum()
    }

    fn largest_nonzero_minor(a: &[Vec<i64>]) -> usize {
        let (nr, nc) = (a.len(), a.first().map_or(0, Vec::len));
        for size in (1..=nr.min(nc)).rev() {
            for rs in subsets(nr, size) {
                for cs in subsets(nc, size) {
                    let minor: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| a[r][c]).collect()).collect();
                    if cofactor_det(&minor) != 0 {
                        return size;
                    }
                }
            }
        }
        0
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..n).filter(|&b| m >> b & 1 == 1).collect())
            .collect()
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(bareiss_determinant(&IntegerMatrix::identity(3)).unwrap(), BigInt::one());
        assert_eq!(bareiss_determinant(&m(&[&[2, 1], &[1, 2]])).unwrap(), BigInt::from(3));
        assert_eq!(bareiss_determinant(&m(&[&[0, 1], &[1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(bareiss_determinant(&m(&[&[1, 2], &[2, 4]])).unwrap(), BigInt::zero());
        assert!(matches!(bareiss_determinant(&m(&[&[1, 2, 3], &[4, 5, 6]])), Err(Error::Shape(_))));
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(IntegerMatrix::from_i64_rows(&[vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(integer_rank(&m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(integer_rank(&IntegerMatrix::empty(3)), 0);
        assert_eq!(integer_rank(&m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])), 2);
    }

    #[test]
    fn hermite_examples() {
        let b = hermite_basis(2, &[big(&[1, 0]), big(&[0, 1])]).unwrap();
        assert_eq!(b.rows(), &[big(&[1, 0]), big(&[0, 1])]);
        let b = hermite_basis(2, &[big(&[2, 0]), big(&[0, 2]), big(&[1, 1])]).unwrap();
        assert_eq!(b.rows(), &[big(&[1, 1]), big(&[0, 2])]);
        let empty = hermite_basis(3, &[]).unwrap();
        assert_eq!(empty.rank(), 0);
        assert!(lattice_contains(&empty, &big(&[0, 0, 0])).unwrap());
        assert!(!lattice_contains(&empty, &big(&[0, 1, 0])).unwrap());
    }

    #[test]
    fn membership_examples() {
        let b = hermite_basis(2, &[big(&[1, 1]), big(&[0, 2])]).unwrap();
        assert!(lattice_contains(&b, &big(&[0, 0])).unwrap());
        assert!(!lattice_contains(&b, &big(&[1, 0])).unwrap());
        assert!(lattice_contains(&b, &big(&[3, -1])).unwrap());
        assert!(matches!(lattice_contains(&b, &big(&[1, 0, 0])), Err(Error::Shape(_))));
    }

    fn is_hnf(b: &LatticeBasis) -> bool {
        let rows = b.rows();
        let piv = b.pivots();
        piv.windows(2).all(|w| w[0] < w[1])
            && rows.iter().zip(piv).all(|(r, &p)| r[..p].iter().all(Zero::is_zero) && r[p].is_positive())
            && (0..rows.len())
                .all(|k| (0..k).all(|a| !rows[a][piv[k]].is_negative() && rows[a][piv[k]] < rows[k][piv[k]]))
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(n in 1usize..=5, seed in proptest::collection::vec(-9i64..=9, 25)) {
            let a: Vec<Vec<i64>> = (0..n).map(|r| seed[r * n..r * n + n].to_vec()).collect();
            let det = bareiss_determinant(&IntegerMatrix::from_i64_rows(&a).unwrap()).unwrap();
            prop_assert_eq!(det, BigInt::from(cofactor_det(&a)));
        }

        #[test]
        fn rank_is_largest_nonzero_minor(nr in 1usize..=4, nc in 1usize..=4, seed in proptest::collection::vec(-2i64..=2, 16)) {
            let a: Vec<Vec<i64>> = (0..nr).map(|r| seed[r * nc..r * nc + nc].to_vec()).collect();
            prop_assert_eq!(integer_rank(&IntegerMatrix::from_i64_rows(&a).unwrap()), largest_nonzero_minor(&a));
        }

        #[test]
        fn hermite_is_idempotent_and_spans_inputs(
            dim in 1usize..=4,
            vs in proptest::collection::vec(proptest::collection::vec(-6i64..=6, 4), 1..6),
            c1 in -3i64..=3,
            c2 in -3i64..=3,
        ) {
            let vectors: Vec<Vec<BigInt>> = vs.iter().map(|v| big(&v[..dim])).collect();
            let b = hermite_basis(dim, &vectors).unwrap();
            prop_assert!(is_hnf(&b));
            let again = hermite_basis(dim, b.rows()).unwrap();
            prop_assert_eq!(again.rows(), b.rows());
            for v in &vectors {
                prop_assert!(lattice_contains(&b, v).unwrap());
            }
            let combo: Vec<BigInt> = vectors[0].iter().zip(vectors.last().unwrap()).map(|(x, y)| x * c1 + y * c2).collect();
            prop_assert!(lattice_contains(&b, &combo).unwrap());
            prop_assert_eq!(b.rank(), integer_rank(&IntegerMatrix::from_rows(vectors.clone()).unwrap()));
        }
    }
}
