//! Exact linear algebra over the rationals.
//!
//! Ranks are computed by fraction-free (Bareiss) elimination on an
//! integerized copy of the matrix, so every intermediate value is an exact
//! integer. Kernels, solutions, and canonical representatives use rational
//! Gauss-Jordan reduction. Pivoting is deterministic everywhere: columns
//! left to right, first row with a nonzero entry.

use num::bigint::BigInt;
use num::{Integer, One, Zero};

use crate::scalar::Scalar;

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    /// Builds a `rows x cols` matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let cols = columns.len();
        let mut m = Matrix::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.data[i * cols + j] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Scalar::zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (j, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                o.add_mul(self.get(i, j), x);
            }
        }
        out
    }

    /// Rank by Bareiss fraction-free elimination. Each row is first scaled
    /// by the lcm of its denominators (rank is unchanged); the elimination
    /// then stays in exact integers with the Bareiss exact division.
    pub fn rank_fraction_free(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let mut lcm = BigInt::one();
                for j in 0..self.cols {
                    lcm = lcm.lcm(self.get(i, j).denom());
                }
                (0..self.cols)
                    .map(|j| {
                        let s = self.get(i, j);
                        s.numer() * (&lcm / s.denom())
                    })
                    .collect()
            })
            .collect();
        let mut prev = BigInt::one();
        let mut rank = 0usize;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for r in rank + 1..self.rows {
                for c in col + 1..self.cols {
                    let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                    m[r][c] = v;
                }
                m[r][col] = BigInt::zero();
            }
            prev = m[rank][col].clone();
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Reduced row echelon form with the list of pivot columns.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                let a = m.get(row, j).clone();
                let b = m.get(p, j).clone();
                m.set(row, j, b);
                m.set(p, j, a);
            }
            let inv = Scalar::one() / m.get(row, col).clone();
            for j in col..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let v = m.get(r, j) - &(m.get(row, j) * &factor);
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.rows {
                break;
            }
        }
        Rref { matrix: m, pivots }
    }

    /// Canonical kernel basis from the reduced echelon form: one vector per
    /// free column (ascending), with a 1 in the free position.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let rref = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in rref.pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Scalar::zero(); self.cols];
            vec[free] = Scalar::one();
            for (r, &c) in rref.pivots.iter().enumerate() {
                vec[c] = -rref.matrix.get(r, free);
            }
            basis.push(vec);
        }
        basis
    }

    /// Solves `self * x = rhs` exactly. Returns the particular solution with
    /// all free variables zero, or `None` when inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (i, r) in rhs.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, r.clone());
        }
        let rref = aug.rref();
        if rref.pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &c) in rref.pivots.iter().enumerate() {
            x[c] = rref.matrix.get(r, self.cols).clone();
        }
        Some(x)
    }
}

pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

/// An incrementally built subspace kept in reduced echelon form, used to
/// reduce vectors modulo a span and to pick canonical quotient
/// representatives.
#[derive(Debug, Clone, Default)]
pub struct RowSpan {
    // rows sorted by pivot column, each with leading coefficient 1 and
    // zeros above and below every pivot
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl RowSpan {
    pub fn new() -> Self {
        RowSpan::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Fully reduces `v` against the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x -= &(r * &factor);
            }
        }
        v
    }

    /// Reduces and, if a nonzero remainder survives, normalizes it and adds
    /// it to the span. Returns the normalized remainder in that case.
    pub fn insert(&mut self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let mut r = self.reduce(v);
        let pivot = r.iter().position(|x| !x.is_zero())?;
        let inv = Scalar::one() / r[pivot].clone();
        for x in &mut r {
            *x = &*x * &inv;
        }
        for (_, row) in &mut self.rows {
            if row[pivot].is_zero() {
                continue;
            }
            let factor = row[pivot].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                *x -= &(y * &factor);
            }
        }
        let pos = self
            .rows
            .binary_search_by_key(&pivot, |(p, _)| *p)
            .unwrap_err();
        self.rows.insert(pos, (pivot, r.clone()));
        Some(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from(v)
    }

    fn mat(rows: usize, cols: usize, vals: &[i64]) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, s(vals[i * cols + j]));
            }
        }
        m
    }

    #[test]
    fn rank_and_rref_agree() {
        let m = mat(3, 4, &[1, 2, 3, 4, 2, 4, 6, 8, 1, 0, 1, 0]);
        assert_eq!(m.rank_fraction_free(), 2);
        assert_eq!(m.rref().pivots.len(), 2);
    }

    #[test]
    fn rank_with_rational_entries() {
        let mut m = Matrix::zeros(2, 2);
        m.set(0, 0, Scalar::from_fraction(1, 2).unwrap());
        m.set(0, 1, Scalar::from_fraction(1, 3).unwrap());
        m.set(1, 0, Scalar::from_fraction(3, 2).unwrap());
        m.set(1, 1, Scalar::one());
        assert_eq!(m.rank_fraction_free(), 1);
    }

    #[test]
    fn kernel_vectors_are_in_kernel() {
        let m = mat(2, 4, &[1, 2, 3, 4, 0, 1, 1, 1]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = mat(3, 2, &[1, 0, 0, 1, 1, 1]);
        let x = m.solve(&[s(2), s(3), s(5)]).unwrap();
        assert_eq!(x, vec![s(2), s(3)]);
        assert!(m.solve(&[s(2), s(3), s(6)]).is_none());
    }

    #[test]
    fn bareiss_and_rref_ranks_agree_on_random_matrices() {
        let mut rng = crate::rng::Lcg::new(63);
        for _ in 0..40 {
            let rows = 1 + rng.next_index(6);
            let cols = 1 + rng.next_index(6);
            let mut m = Matrix::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    let num = rng.next_coeff(6);
                    let den = 1 + rng.next_index(4) as i64;
                    m.set(i, j, Scalar::from_fraction(num, den).unwrap());
                }
            }
            assert_eq!(m.rank_fraction_free(), m.rref().pivots.len());
        }
    }

    #[test]
    fn row_span_reduction() {
        let mut span = RowSpan::new();
        assert!(span.insert(&[s(0), s(2), s(4)]).is_some());
        assert!(span.insert(&[s(0), s(1), s(2)]).is_none());
        let r = span.reduce(&[s(1), s(3), s(6)]);
        assert_eq!(r, vec![s(1), s(0), s(0)]);
        assert_eq!(span.rank(), 1);
        assert!(span.insert(&[s(1), s(3), s(6)]).is_some());
        assert_eq!(span.rank(), 2);
    }
}
