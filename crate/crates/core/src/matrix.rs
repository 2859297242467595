//! Small dense matrices over exact scalars.
//!
//! Nothing clever: row-major `Vec` storage, Gaussian elimination with exact
//! rationals for determinants and inverses, fraction-free elimination over
//! the integers for ranks. Sizes in this crate stay well under 100, so
//! asymptotics do not matter; exactness does.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::Rational;

/// Dense matrix of exact rationals, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMat { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::validation("ragged matrix rows"));
        }
        Ok(RatMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut m = RatMat::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> RatMat {
        RatMat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        RatMat::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &other[(k, j)]).sum()
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    /// Determinant by exact Gaussian elimination.
    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rational::one();
        }
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[(r, col)].is_zero());
            let Some(p) = pivot else { return Rational::zero() };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pv = m[(col, col)].clone();
            det *= &pv;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let f = &m[(r, col)] / &pv;
                for c in col..n {
                    let sub = &f * &m[(col, c)];
                    m[(r, c)] -= sub;
                }
            }
        }
        det
    }

    /// Exact inverse; error if singular.
    pub fn inverse(&self) -> Result<RatMat> {
        assert!(self.is_square(), "inverse of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = RatMat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[(r, col)].is_zero());
            let Some(p) = pivot else {
                return Err(Error::validation("singular matrix has no inverse"));
            };
            if p != col {
                m.swap_rows(p, col);
                inv.swap_rows(p, col);
            }
            let pv = m[(col, col)].clone();
            for c in 0..n {
                m[(col, c)] /= &pv;
                inv[(col, c)] /= &pv;
            }
            for r in 0..n {
                if r == col || m[(r, col)].is_zero() {
                    continue;
                }
                let f = m[(r, col)].clone();
                for c in 0..n {
                    let s1 = &f * &m[(col, c)];
                    m[(r, c)] -= s1;
                    let s2 = &f * &inv[(col, c)];
                    inv[(r, c)] -= s2;
                }
            }
        }
        Ok(inv)
    }

    /// Leading principal minors, sizes 1..=n (exact).
    pub fn leading_principal_minors(&self) -> Vec<Rational> {
        assert!(self.is_square());
        (1..=self.rows)
            .map(|k| RatMat::from_fn(k, k, |i, j| self[(i, j)].clone()).det())
            .collect()
    }

    /// Symmetric positive definiteness via signs of the leading principal minors.
    pub fn is_positive_definite(&self) -> bool {
        self.is_symmetric() && self.leading_principal_minors().iter().all(|m| m.is_positive())
    }

    /// Kronecker product, blocks ordered row-major by `self`'s entries.
    pub fn kronecker(&self, other: &RatMat) -> RatMat {
        RatMat::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            let (bi, ii) = (i / other.rows, i % other.rows);
            let (bj, jj) = (j / other.cols, j % other.cols);
            &self[(bi, bj)] * &other[(ii, jj)]
        })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &RatMat) -> RatMat {
        RatMat::from_fn(self.rows + other.rows, self.cols + other.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self[(i, j)].clone()
            } else if i >= self.rows && j >= self.cols {
                other[(i - self.rows, j - self.cols)].clone()
            } else {
                Rational::zero()
            }
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for RatMat {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Rank over ℚ of an integer matrix, by fraction-free (Bareiss-style)
/// elimination. Rows are `Vec<BigInt>`.
pub fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    let mut col = 0;
    while rank < nrows && col < ncols {
        let Some(p) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            col += 1;
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = (&rows[rank][col] * &rows[r][c] - &rows[r][col] * &rows[rank][c])
                    / &prev_pivot;
                rows[r][c] = v;
            }
            rows[r][col] = BigInt::zero();
        }
        prev_pivot = pivot;
        rank += 1;
        col += 1;
    }
    rank
}

/// Determinant of an integer matrix via Bareiss elimination (exact, no fractions).
pub fn integer_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(m.iter().all(|r| r.len() == n));
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// |det| = 1 test for an integer matrix.
pub fn is_unimodular_int(m: &[Vec<BigInt>]) -> bool {
    integer_det(m.to_vec()).abs().is_one()
}

/// Row-space basis of an integer matrix as a ℤ-module: Hermite-style
/// elimination with Euclidean row operations. Returns `rank` many rows
/// spanning the same module as the input rows.
pub fn hnf_row_basis(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return rows;
    }
    let ncols = rows[0].len();
    let mut r = 0usize;
    for c in 0..ncols {
        if r >= rows.len() {
            break;
        }
        loop {
            // Pivot: row (≥ r) with the smallest nonzero |entry| in column c.
            let mut pivot: Option<(usize, BigInt)> = None;
            for (i, row) in rows.iter().enumerate().skip(r) {
                if row[c].is_zero() {
                    continue;
                }
                let a = row[c].abs();
                if pivot.as_ref().is_none_or(|(_, b)| a < *b) {
                    pivot = Some((i, a));
                }
            }
            let Some((p, _)) = pivot else { break };
            rows.swap(r, p);
            let mut any_nonzero = false;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = div_round(&rows[i][c], &rows[r][c]);
                if !q.is_zero() {
                    for k in 0..ncols {
                        let sub = &q * &rows[r][k];
                        rows[i][k] -= sub;
                    }
                }
                if !rows[i][c].is_zero() {
                    any_nonzero = true;
                }
            }
            if !any_nonzero {
                r += 1;
                break;
            }
            // Remainders are smaller; iterate until the column is clean.
        }
    }
    rows.truncate(r);
    rows
}

/// Integer division rounded to the nearest quotient (|a − qb| ≤ |b|/2).
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let q0 = a / b;
    let mut best_q = q0.clone();
    let mut best_r = (a - &q0 * b).abs();
    for dq in [-1i32, 1] {
        let q = &q0 + dq;
        let r = (a - &q * b).abs();
        if r < best_r {
            best_r = r;
            best_q = q;
        }
    }
    best_q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn m(rows: &[&[i64]]) -> RatMat {
        RatMat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn det_2x2() {
        assert_eq!(m(&[&[2, 1], &[1, 2]]).det(), rat(3));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det(), rat(0));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), RatMat::identity(3));
    }

    #[test]
    fn pd_check() {
        assert!(m(&[&[2, 1], &[1, 2]]).is_positive_definite());
        assert!(!m(&[&[1, 2], &[2, 1]]).is_positive_definite());
        assert!(!m(&[&[0, 0], &[0, 1]]).is_positive_definite());
    }

    #[test]
    fn kronecker_shape_and_det() {
        let a2 = m(&[&[2, 1], &[1, 2]]);
        let k = a2.kronecker(&a2);
        assert_eq!(k.nrows(), 4);
        // det(A ⊗ B) = det(A)^m det(B)^n
        assert_eq!(k.det(), rat(81));
    }

    #[test]
    fn integer_rank_and_det() {
        let rows: Vec<Vec<BigInt>> = vec![
            vec![1.into(), 2.into(), 3.into()],
            vec![2.into(), 4.into(), 6.into()],
            vec![0.into(), 1.into(), 1.into()],
        ];
        assert_eq!(integer_rank(rows.clone()), 2);
        assert_eq!(integer_det(rows), BigInt::zero());
        let id: Vec<Vec<BigInt>> =
            vec![vec![1.into(), 0.into()], vec![0.into(), 1.into()]];
        assert!(is_unimodular_int(&id));
    }
}
