//! Dense matrix containers.
//!
//! `RationalMatrix` is the exact classification substrate, `RealMatrix` the
//! floating QR substrate. Every public interface is 1-based, matching the
//! usual row/column conventions of matrix analysis; storage is 0-based
//! row-major and never leaks.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{rat_int, rat_to_f64, Rat};

/// Dense `m x n` matrix of exact rationals. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RationalMatrix {
    /// Builds a matrix from row-major entries. `entries.len()` must equal
    /// `rows * cols` and both dimensions must be at least 1.
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(
                "matrix dimensions must be at least 1x1".into(),
            ));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("ragged rows".into()));
        }
        Self::new(m, n, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from integer literals.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().copied().map(rat_int).collect())
                .collect(),
        )
        .expect("literal matrix is well formed")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        Self::new(rows, cols, entries).expect("dimensions are positive")
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| rat_int(i64::from(i == j)))
    }

    /// Backward identity `P_r`: ones on the antidiagonal `i + j = r + 1`.
    pub fn backward_identity(r: usize) -> Self {
        Self::from_fn(r, r, |i, j| rat_int(i64::from(i + j == r + 1)))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `min(m, n)`, the maximal possible rank.
    pub fn min_dim(&self) -> usize {
        self.rows.min(self.cols)
    }

    /// Entry at 1-based position `(i, j)`. Panics when out of range.
    pub fn at(&self, i: usize, j: usize) -> &Rat {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "entry ({i}, {j}) out of range for a {}x{} matrix",
            self.rows,
            self.cols
        );
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn is_zero_at(&self, i: usize, j: usize) -> bool {
        self.at(i, j).is_zero()
    }

    /// Row-reversed matrix `P_m * A`: row `k` of the result is row
    /// `m - k + 1` of `self`.
    pub fn reverse_rows(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            self.at(self.rows - i + 1, j).clone()
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// Column-reversed matrix `A * P_n`.
    pub fn reverse_cols(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, self.cols - j + 1).clone()
        })
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| -self.at(i, j).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (1..=self.cols)
                .map(|k| self.at(i, k) * other.at(k, j))
                .fold(Rat::zero(), |acc, v| acc + v)
        }))
    }

    /// Submatrix with the given 1-based rows and columns, in order.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        Self::from_fn(row_idx.len(), col_idx.len(), |i, j| {
            self.at(row_idx[i - 1], col_idx[j - 1]).clone()
        })
    }

    /// Truncation to the first `rows` rows and `cols` columns.
    pub fn truncate(&self, rows: usize, cols: usize) -> Result<Self> {
        if rows > self.rows || cols > self.cols {
            return Err(Error::InvalidArgument("truncation enlarges matrix".into()));
        }
        Ok(Self::from_fn(rows, cols, |i, j| self.at(i, j).clone()))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        (0..self.entries.len()).map(move |idx| {
            (
                idx / self.cols + 1,
                idx % self.cols + 1,
                &self.entries[idx],
            )
        })
    }

    /// Nearest-double image of the matrix; the exact-to-float boundary.
    pub fn to_real(&self) -> RealMatrix {
        RealMatrix::new(
            self.rows,
            self.cols,
            self.entries.iter().map(rat_to_f64).collect(),
        )
        .expect("rational entries are finite")
    }
}

/// Dense `m x n` matrix of machine reals; all entries finite.
#[derive(Debug, Clone, PartialEq)]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
}

impl RealMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidArgument(
                "matrix dimensions must be at least 1x1".into(),
            ));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(
                "real matrix entries must be finite".into(),
            ));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![0.0; rows * cols]).expect("dimensions are positive")
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 1..=n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_f64_rows(rows: &[&[f64]]) -> Self {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        Self::new(m, n, rows.iter().flat_map(|r| r.iter().copied()).collect())
            .expect("literal matrix is well formed")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 1-based `(i, j)`.
    pub fn at(&self, i: usize, j: usize) -> f64 {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "entry ({i}, {j}) out of range for a {}x{} matrix",
            self.rows,
            self.cols
        );
        self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: f64) {
        self.entries[(i - 1) * self.cols + (j - 1)] = v;
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (1..=self.rows).map(|i| self.at(i, j)).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        let mut out = Self::zeros(row_idx.len(), col_idx.len());
        for (i, &r) in row_idx.iter().enumerate() {
            for (j, &c) in col_idx.iter().enumerate() {
                out.set(i + 1, j + 1, self.at(r, c));
            }
        }
        out
    }
}
