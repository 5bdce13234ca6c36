use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Reduced row echelon form together with its rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<T: Scalar> {
    pub matrix: Matrix<T>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch { left: rows * cols, right: data.len() });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Builds from a list of rows; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch { left: cols, right: r.len() });
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch { left: self.cols, right: v.len() });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch { left: self.cols, right: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let v = (0..self.cols)
                    .fold(T::zero(), |acc, k| acc + self.get(r, k).clone() * other.get(k, c).clone());
                out.set(r, c, v);
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Fraction-free forward elimination (Bareiss), in place.
    ///
    /// Returns the pivot columns and the sign of the row permutation. Every
    /// division is by the previous pivot and is exact on integer input.
    fn bareiss(&mut self) -> (Vec<usize>, bool) {
        let mut pivots = Vec::new();
        let mut prev = T::one();
        let mut row = 0;
        let mut odd = false;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            // Cheapest nonzero pivot in this column.
            let Some(p) = (row..self.rows)
                .filter(|&r| !self.get(r, col).is_zero())
                .min_by_key(|&r| self.get(r, col).bit_size())
            else {
                continue;
            };
            if p != row {
                self.swap_rows(p, row);
                odd = !odd;
            }
            let pivot = self.get(row, col).clone();
            for r in row + 1..self.rows {
                let factor = self.get(r, col).clone();
                for c in col + 1..self.cols {
                    let v = (pivot.clone() * self.get(r, c).clone()
                        - factor.clone() * self.get(row, c).clone())
                        / prev.clone();
                    self.set(r, c, v);
                }
                self.set(r, col, T::zero());
            }
            prev = pivot;
            pivots.push(col);
            row += 1;
        }
        (pivots, odd)
    }

    /// Exact reduced row echelon form.
    ///
    /// Rows are first cleared of denominators, the forward phase is
    /// fraction-free with smallest-bit-size pivoting, and the
    /// backward phase normalizes pivots to 1 and clears pivot columns.
    pub fn rref(&self) -> Rref<T> {
        let mut m = self.clone();
        // Row scaling preserves the row space; integer rows keep Bareiss
        // divisions exact and the intermediate entries small.
        for r in 0..m.rows {
            T::normalize_direction(&mut m.data[r * m.cols..(r + 1) * m.cols]);
        }
        let (pivots, _) = m.bareiss();
        for (i, &pc) in pivots.iter().enumerate().rev() {
            let inv = T::one() / m.get(i, pc).clone();
            for c in pc..m.cols {
                let v = m.get(i, c).clone() * inv.clone();
                m.set(i, c, v);
            }
            for r in 0..i {
                let factor = m.get(r, pc).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in pc..m.cols {
                    let v = m.get(r, c).clone() - factor.clone() * m.get(i, c).clone();
                    m.set(r, c, v);
                }
            }
        }
        for r in pivots.len()..m.rows {
            for c in 0..m.cols {
                m.set(r, c, T::zero());
            }
        }
        Rref { rank: pivots.len(), pivots, matrix: m }
    }

    pub fn rank(&self) -> usize {
        self.clone().bareiss().0.len()
    }

    /// Determinant of a square matrix, from the last Bareiss pivot.
    pub fn determinant(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::Structure {
                expected: "a square matrix".into(),
                got: format!("{}x{}", self.rows, self.cols),
            });
        }
        if self.rows == 0 {
            return Ok(T::one());
        }
        let mut m = self.clone();
        let (pivots, odd) = m.bareiss();
        if pivots.len() < self.rows {
            return Ok(T::zero());
        }
        let det = m.get(self.rows - 1, self.cols - 1).clone();
        Ok(if odd { -det } else { det })
    }

    /// Basis of the right kernel; each vector has integer entries with content
    /// 1 and a positive leading entry.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = -matrix.get(i, f).clone();
                }
                T::normalize_direction(&mut v);
                v
            })
            .collect()
    }

    /// One solution of `self * x = rhs`, or `None` when inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, rhs: &[T]) -> Result<Option<Vec<T>>> {
        if rhs.len() != self.rows {
            return Err(Error::LengthMismatch { left: self.rows, right: rhs.len() });
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for (r, b) in rhs.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b.clone());
        }
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![T::zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = matrix.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        write!(f, "{self}")
    }
}

/// Rows of space-separated `p/q` entries, one row per line.
impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            f.write_str(&row.join(" "))?;
        }
        Ok(())
    }
}
