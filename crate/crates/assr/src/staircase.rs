//! Staircase structure detection and zero-pattern index sets.
//!
//! A type-I staircase matrix has a nonzero diagonal, every zero below the
//! diagonal forces zeros in its whole lower-left shadow, and every zero above
//! forces its upper-right shadow. A type-II staircase matrix is one whose
//! row reversal is type-I. The zero pattern of a type-I staircase matrix is
//! encoded by four index sets `I`, `J`, `I_hat`, `J_hat` marking where the
//! zero blocks begin.

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;

/// Which staircase definitions a matrix satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StaircaseType {
    TypeI,
    TypeII,
    Both,
    Neither,
}

impl StaircaseType {
    pub fn is_staircase(self) -> bool {
        self != StaircaseType::Neither
    }

    /// Whether type-I conventions apply (type-I wins when both hold).
    pub fn prefers_type1(self) -> bool {
        matches!(self, StaircaseType::TypeI | StaircaseType::Both)
    }
}

impl std::fmt::Display for StaircaseType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            StaircaseType::TypeI => "type-I",
            StaircaseType::TypeII => "type-II",
            StaircaseType::Both => "both",
            StaircaseType::Neither => "neither",
        })
    }
}

/// Type-I staircase test: nonzero diagonal plus shadow closure of the zero
/// set. The shadow conditions are checked through their one-step local form
/// (down/left neighbors below the diagonal, up/right above), which is
/// equivalent by induction along paths.
pub fn is_type1_staircase(a: &RationalMatrix) -> bool {
    let (m, n) = (a.rows(), a.cols());
    for d in 1..=a.min_dim() {
        if a.is_zero_at(d, d) {
            return false;
        }
    }
    for i in 1..=m {
        for j in 1..=n {
            if !a.is_zero_at(i, j) {
                continue;
            }
            if i > j {
                if i < m && !a.is_zero_at(i + 1, j) {
                    return false;
                }
                if j > 1 && !a.is_zero_at(i, j - 1) {
                    return false;
                }
            } else if i < j {
                if i > 1 && !a.is_zero_at(i - 1, j) {
                    return false;
                }
                if j < n && !a.is_zero_at(i, j + 1) {
                    return false;
                }
            }
        }
    }
    true
}

/// Type-II staircase test: the row reversal is type-I.
pub fn is_type2_staircase(a: &RationalMatrix) -> bool {
    is_type1_staircase(&a.reverse_rows())
}

pub fn staircase_type(a: &RationalMatrix) -> StaircaseType {
    match (is_type1_staircase(a), is_type2_staircase(a)) {
        (true, true) => StaircaseType::Both,
        (true, false) => StaircaseType::TypeI,
        (false, true) => StaircaseType::TypeII,
        (false, false) => StaircaseType::Neither,
    }
}

/// Zero-pattern index sets of a type-I staircase matrix.
///
/// `I`/`J` describe the lower-left zero blocks, `I_hat`/`J_hat` the
/// upper-right ones (obtained by running the same recursion on the
/// transpose and swapping the roles of the lists).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroPattern {
    i_list: Vec<usize>,
    j_list: Vec<usize>,
    i_hat: Vec<usize>,
    j_hat: Vec<usize>,
}

impl ZeroPattern {
    pub fn i_list(&self) -> &[usize] {
        &self.i_list
    }

    pub fn j_list(&self) -> &[usize] {
        &self.j_list
    }

    pub fn i_hat(&self) -> &[usize] {
        &self.i_hat
    }

    pub fn j_hat(&self) -> &[usize] {
        &self.j_hat
    }

    /// Whether the pattern forces a zero at `(i, j)` strictly below the
    /// diagonal.
    pub fn lower_zero(&self, i: usize, j: usize) -> bool {
        self.i_list
            .iter()
            .zip(&self.j_list)
            .skip(1)
            .any(|(&ik, &jk)| i >= ik && j < jk)
    }

    /// Whether the pattern forces a zero at `(i, j)` strictly above the
    /// diagonal.
    pub fn upper_zero(&self, i: usize, j: usize) -> bool {
        self.i_hat
            .iter()
            .zip(&self.j_hat)
            .skip(1)
            .any(|(&ik, &jk)| i < ik && j >= jk)
    }

    /// The pair `(j_t, i_t)` of the defining inequality for a position at or
    /// below the diagonal: among the pattern positions `s` with
    /// `j - j_s <= i - i_s`, the one with maximal `j_s`.
    pub fn jt(&self, i: usize, j: usize) -> (usize, usize) {
        assert!(j <= i, "jt requires a position at or below the diagonal");
        let k = self.j_list.iter().position(|&jk| j < jk).expect("j < last");
        // j - j_s <= i - i_s, rearranged to avoid unsigned underflow.
        let t = (0..k)
            .rev()
            .find(|&s| j + self.i_list[s] <= i + self.j_list[s])
            .expect("s = 0 is always admissible");
        (self.j_list[t], self.i_list[t])
    }

    /// Mirror of [`ZeroPattern::jt`] for positions above the diagonal,
    /// returning `(i_hat_t, j_hat_t)`.
    pub fn it_hat(&self, i: usize, j: usize) -> (usize, usize) {
        assert!(j > i, "it_hat requires a position above the diagonal");
        let k = self.i_hat.iter().position(|&ik| i < ik).expect("i < last");
        // i - i_hat_s <= j - j_hat_s, rearranged to avoid unsigned underflow.
        let t = (0..k)
            .rev()
            .find(|&s| i + self.j_hat[s] <= j + self.i_hat[s])
            .expect("s = 0 is always admissible");
        (self.i_hat[t], self.j_hat[t])
    }
}

/// Runs the zero-pattern recursion for the lower-left blocks only and
/// returns (I, J).
fn lower_pattern(a: &RationalMatrix) -> (Vec<usize>, Vec<usize>) {
    let (m, n) = (a.rows(), a.cols());
    let r = a.min_dim();
    let mut i_list = vec![1usize];
    let mut j_list = vec![1usize];
    loop {
        let j_prev = *j_list.last().unwrap();
        let max_nonzero = (1..=m)
            .rev()
            .find(|&i| !a.is_zero_at(i, j_prev))
            .expect("column has a nonzero diagonal entry");
        let ik_raw = max_nonzero + 1;
        let (ik, jk) = if ik_raw > m {
            // The column is nonzero down to the bottom row; the pattern
            // closes out past the matrix edge.
            (ik_raw, n + 1)
        } else {
            // Row ik exists even when the diagonal is exhausted
            // (ik > r on tall matrices); scanning it keeps the encoded
            // zero blocks exact. In the square case ik = r + 1 never
            // reaches this branch.
            let cap = ik_raw.min(n);
            let last_zero = (1..=cap)
                .rev()
                .find(|&j| a.is_zero_at(ik_raw, j))
                .expect("row ik has a zero at column j_{k-1}");
            (ik_raw, last_zero + 1)
        };
        i_list.push(ik);
        j_list.push(jk);
        if jk > r {
            return (i_list, j_list);
        }
    }
}

/// Zero-pattern index sets of a type-I staircase matrix. Errors when the
/// matrix is not type-I staircase.
pub fn zero_pattern(a: &RationalMatrix) -> Result<ZeroPattern> {
    if !is_type1_staircase(a) {
        return Err(Error::NotStaircase);
    }
    let (i_list, j_list) = lower_pattern(a);
    let (i_bar, j_bar) = lower_pattern(&a.transpose());
    debug_assert!(i_list.windows(2).all(|w| w[0] < w[1]));
    debug_assert!(j_list.windows(2).all(|w| w[0] < w[1]));
    Ok(ZeroPattern {
        i_list,
        j_list,
        i_hat: j_bar,
        j_hat: i_bar,
    })
}

/// The pair `(j_t, i_t)` for a position `(i, j)` with `j <= i` of a type-I
/// staircase matrix.
pub fn index_jt(a: &RationalMatrix, i: usize, j: usize) -> Result<(usize, usize)> {
    if j > i {
        return Err(Error::InvalidArgument(format!(
            "index_jt requires j <= i, got ({i}, {j})"
        )));
    }
    if i > a.rows() || j < 1 {
        return Err(Error::InvalidArgument(format!(
            "position ({i}, {j}) out of range"
        )));
    }
    Ok(zero_pattern(a)?.jt(i, j))
}

/// The pair `(i_hat_t, j_hat_t)` for a position `(i, j)` with `j > i` of a
/// type-I staircase matrix.
pub fn index_it_hat(a: &RationalMatrix, i: usize, j: usize) -> Result<(usize, usize)> {
    if j <= i {
        return Err(Error::InvalidArgument(format!(
            "index_it_hat requires j > i, got ({i}, {j})"
        )));
    }
    if j > a.cols() || i < 1 {
        return Err(Error::InvalidArgument(format!(
            "position ({i}, {j}) out of range"
        )));
    }
    Ok(zero_pattern(a)?.it_hat(i, j))
}
