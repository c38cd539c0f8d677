use serde::{Deserialize, Serialize};

use super::{LinalgError, Result};

/// Dense real symmetric matrix in packed upper-triangular storage.
///
/// Entry `(i, j)` and `(j, i)` share one slot, so symmetry holds exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymMatrix {
    n: usize,
    packed: Vec<f64>,
}

#[inline]
fn slot(i: usize, j: usize) -> usize {
    let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
    hi * (hi + 1) / 2 + lo
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(LinalgError::Empty);
        }
        Ok(Self { n, packed: vec![0.0; n * (n + 1) / 2] })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::scaled_identity(n, 1.0)
    }

    pub fn scaled_identity(n: usize, value: f64) -> Result<Self> {
        let mut m = Self::zeros(n)?;
        for i in 0..n {
            m.set(i, i, value);
        }
        Ok(m)
    }

    pub fn diagonal(values: &[f64]) -> Result<Self> {
        let mut m = Self::zeros(values.len())?;
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, v);
        }
        Ok(m)
    }

    /// Builds from `f(i, j)` evaluated on the upper triangle `i <= j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut m = Self::zeros(n)?;
        for j in 0..n {
            for i in 0..=j {
                m.packed[slot(i, j)] = f(i, j);
            }
        }
        Ok(m)
    }

    /// Builds from a full row-major square matrix, averaging `(i, j)` and `(j, i)`.
    pub fn from_rows_symmetrized(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        for row in rows {
            if row.len() != n {
                return Err(LinalgError::DimensionMismatch { expected: n, actual: row.len() });
            }
        }
        Self::from_fn(n, |i, j| 0.5 * (rows[i][j] + rows[j][i]))
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of range for n = {}", self.n);
        self.packed[slot(i, j)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of range for n = {}", self.n);
        self.packed[slot(i, j)] = value;
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        let mut sum = 0.0;
        for j in 0..self.n {
            for i in 0..=j {
                let v = self.packed[slot(i, j)];
                sum += if i == j { v * v } else { 2.0 * v * v };
            }
        }
        sum.sqrt()
    }

    /// Largest absolute row sum.
    pub fn max_row_sum(&self) -> f64 {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n {
            return Err(LinalgError::DimensionMismatch { expected: self.n, actual: x.len() });
        }
        Ok((0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum()).collect())
    }

    /// `alpha * self + beta * other`.
    pub fn combine(&self, alpha: f64, other: &SymMatrix, beta: f64) -> Result<SymMatrix> {
        if other.n != self.n {
            return Err(LinalgError::DimensionMismatch { expected: self.n, actual: other.n });
        }
        Ok(SymMatrix {
            n: self.n,
            packed: self.packed.iter().zip(&other.packed).map(|(a, b)| alpha * a + beta * b).collect(),
        })
    }

    /// `self + shift * I`.
    pub fn shifted(&self, shift: f64) -> SymMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.packed[slot(i, i)] += shift;
        }
        m
    }

    /// Entrywise maximum absolute difference.
    pub fn max_abs_diff(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.n, other.n);
        self.packed.iter().zip(&other.packed).fold(0.0, |acc, (a, b)| acc.max((a - b).abs()))
    }
}
