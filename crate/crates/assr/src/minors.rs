//! Exact minor computation and submatrix classification.
//!
//! Determinants run over exact rationals: rows are scaled to integers and
//! eliminated with Bareiss fraction-free pivoting, so every minor sign is
//! exact. A plain Laplace expansion is kept as an independent cross-check
//! oracle for small orders.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::Rat;
use crate::seq::{enumerate_sequences, sequence_count, IndexSequence};
use crate::staircase::{staircase_type, StaircaseType};

/// Default cap on the number of minors a single enumeration may evaluate.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// A row/column selection `A[alpha | beta]` of equal lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinorQuery {
    alpha: IndexSequence,
    beta: IndexSequence,
}

impl MinorQuery {
    pub fn new(alpha: IndexSequence, beta: IndexSequence) -> Result<Self> {
        if alpha.len() != beta.len() {
            return Err(Error::InvalidArgument(format!(
                "row selection has length {} but column selection {}",
                alpha.len(),
                beta.len()
            )));
        }
        Ok(Self { alpha, beta })
    }

    /// Builds a query from raw 1-based indices against a target shape.
    pub fn from_indices(rows: &[usize], cols: &[usize], m: usize, n: usize) -> Result<Self> {
        Self::new(
            IndexSequence::new(rows.to_vec(), m)?,
            IndexSequence::new(cols.to_vec(), n)?,
        )
    }

    pub fn order(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &IndexSequence {
        &self.alpha
    }

    pub fn beta(&self) -> &IndexSequence {
        &self.beta
    }

    pub fn validate_for(&self, a: &RationalMatrix) -> Result<()> {
        if self.alpha.last() > a.rows() || self.beta.last() > a.cols() {
            return Err(Error::InvalidArgument(format!(
                "selection ({}, {}) out of range for a {}x{} matrix",
                self.alpha,
                self.beta,
                a.rows(),
                a.cols()
            )));
        }
        Ok(())
    }
}

impl std::fmt::Display for MinorQuery {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}|{}]", self.alpha, self.beta)
    }
}

/// Exact determinant of the selected submatrix.
pub fn minor(a: &RationalMatrix, q: &MinorQuery) -> Result<Rat> {
    q.validate_for(a)?;
    Ok(det_exact(&a.submatrix(
        q.alpha.indices(),
        q.beta.indices(),
    )))
}

/// Exact determinant of a square rational matrix via Bareiss elimination on
/// the integer matrix obtained by clearing denominators row by row.
pub fn det_exact(a: &RationalMatrix) -> Rat {
    assert_eq!(a.rows(), a.cols(), "determinant requires a square matrix");
    let k = a.rows();
    let mut scale = BigInt::one();
    let mut grid: Vec<Vec<BigInt>> = Vec::with_capacity(k);
    for i in 1..=k {
        let lcm = (1..=k).fold(BigInt::one(), |acc, j| acc.lcm(a.at(i, j).denom()));
        grid.push(
            (1..=k)
                .map(|j| {
                    let e = a.at(i, j);
                    e.numer() * (&lcm / e.denom())
                })
                .collect(),
        );
        scale *= lcm;
    }
    Rat::new(bareiss_det(grid), scale)
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let k = m.len();
    let mut negated = false;
    let mut prev = BigInt::one();
    for c in 0..k {
        let Some(pivot) = (c..k).find(|&r| !m[r][c].is_zero()) else {
            return BigInt::zero();
        };
        if pivot != c {
            m.swap(pivot, c);
            negated = !negated;
        }
        for i in c + 1..k {
            for j in c + 1..k {
                // Exact division is the Bareiss invariant.
                let v = (&m[i][j] * &m[c][c] - &m[i][c] * &m[c][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[c][c].clone();
    }
    let det = std::mem::take(&mut m[k - 1][k - 1]);
    if negated {
        -det
    } else {
        det
    }
}

/// Cofactor-expansion determinant; the independent oracle for small orders.
pub fn laplace_det(a: &RationalMatrix) -> Rat {
    assert_eq!(a.rows(), a.cols(), "determinant requires a square matrix");
    let k = a.rows();
    if k == 1 {
        return a.at(1, 1).clone();
    }
    let mut acc = Rat::zero();
    for j in 1..=k {
        if a.is_zero_at(1, j) {
            continue;
        }
        let rest_rows: Vec<usize> = (2..=k).collect();
        let rest_cols: Vec<usize> = (1..=k).filter(|&c| c != j).collect();
        let cofactor = laplace_det(&a.submatrix(&rest_rows, &rest_cols));
        let term = a.at(1, j) * cofactor;
        acc = if j % 2 == 1 { acc + term } else { acc - term };
    }
    acc
}

/// Nontriviality test. In type-I mode the diagonal entries
/// `a[alpha_i, beta_i]` must all be nonzero; in type-II mode the row-reversed
/// pairing `a[alpha_{k+1-i}, beta_i]` is used instead, matching the pairing
/// of the row-reversed matrix.
pub fn is_nontrivial(a: &RationalMatrix, q: &MinorQuery, type2: bool) -> bool {
    let k = q.order();
    (1..=k).all(|i| {
        let row = if type2 {
            q.alpha.get(k + 1 - i)
        } else {
            q.alpha.get(i)
        };
        !a.is_zero_at(row, q.beta.get(i))
    })
}

/// Boundary classification flags for a consecutive-index submatrix.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BoundaryKind {
    /// Nonzero diagonal and the column slice left of the block is zero (or
    /// the block touches the left edge).
    pub column_boundary: bool,
    /// Nonzero diagonal and the row slice above the block is zero (or the
    /// block touches the top edge).
    pub row_boundary: bool,
    /// A boundary submatrix anchored at the first row or first column.
    pub initial: bool,
    /// Like `column_boundary` but only the top-left entry must be nonzero.
    pub column_generalized: bool,
    /// Like `row_boundary` but only the top-left entry must be nonzero.
    pub row_generalized: bool,
}

impl BoundaryKind {
    pub fn any_boundary(&self) -> bool {
        self.column_boundary || self.row_boundary
    }
}

fn classify_boundary_type1(a: &RationalMatrix, q: &MinorQuery) -> BoundaryKind {
    let k = q.order();
    let (a1, b1) = (q.alpha.first(), q.beta.first());
    let diag_nonzero = (1..=k).all(|i| !a.is_zero_at(q.alpha.get(i), q.beta.get(i)));
    let corner_nonzero = !a.is_zero_at(a1, b1);
    let col_block_zero =
        b1 == 1 || (1..=k).all(|i| a.is_zero_at(q.alpha.get(i), b1 - 1));
    let row_block_zero =
        a1 == 1 || (1..=k).all(|j| a.is_zero_at(a1 - 1, q.beta.get(j)));
    let column_boundary = diag_nonzero && col_block_zero;
    let row_boundary = diag_nonzero && row_block_zero;
    BoundaryKind {
        column_boundary,
        row_boundary,
        initial: (column_boundary || row_boundary) && (a1 == 1 || b1 == 1),
        column_generalized: corner_nonzero && col_block_zero,
        row_generalized: corner_nonzero && row_block_zero,
    }
}

/// Boundary flags of `A[alpha | beta]`. Both sequences must be consecutive.
/// For a type-II staircase matrix the flags are evaluated on the
/// row-reversed matrix, where `P_k B` sits as `(P_m A)[alpha~ | beta]`.
/// Matrices that are not staircase are classified by the literal type-I
/// formulas.
pub fn classify_boundary(a: &RationalMatrix, q: &MinorQuery) -> Result<BoundaryKind> {
    q.validate_for(a)?;
    if !q.alpha.is_consecutive() || !q.beta.is_consecutive() {
        return Err(Error::InvalidArgument(format!(
            "boundary classification requires consecutive sequences, got ({}, {})",
            q.alpha, q.beta
        )));
    }
    classify_boundary_with_type(a, q, staircase_type(a))
}

pub(crate) fn classify_boundary_with_type(
    a: &RationalMatrix,
    q: &MinorQuery,
    kind: StaircaseType,
) -> Result<BoundaryKind> {
    if kind == StaircaseType::TypeII {
        let m = a.rows();
        let k = q.order();
        let reversed_rows: Vec<usize> = (0..k).map(|t| m + 1 - q.alpha.last() + t).collect();
        let rq = MinorQuery::from_indices(&reversed_rows, q.beta.indices(), m, a.cols())?;
        return Ok(classify_boundary_type1(&a.reverse_rows(), &rq));
    }
    Ok(classify_boundary_type1(a, q))
}

/// One item of a minor enumeration stream.
#[derive(Debug, Clone)]
pub struct MinorItem {
    pub query: MinorQuery,
    pub value: Rat,
    pub nontrivial: bool,
    /// Present only for consecutive-index selections.
    pub boundary: Option<BoundaryKind>,
}

/// Number of `(alpha, beta)` pairs of order `k`, saturating at `u64::MAX`.
pub fn pair_count(m: usize, n: usize, k: usize, consecutive_only: bool) -> u64 {
    sequence_count(k, m, consecutive_only).saturating_mul(sequence_count(k, n, consecutive_only))
}

/// Streams every minor of order `k` in lexicographic `(alpha, beta)` order
/// together with its nontriviality and boundary flags. The whole enumeration
/// is checked against `budget` up front and fails loudly when it does not
/// fit; nothing is ever silently truncated.
pub fn enumerate_minors(
    a: &RationalMatrix,
    k: usize,
    consecutive_only: bool,
    budget: u64,
) -> Result<impl Iterator<Item = MinorItem> + '_> {
    if k == 0 || k > a.min_dim() {
        return Err(Error::InvalidArgument(format!(
            "minor order {k} out of range 1..={}",
            a.min_dim()
        )));
    }
    let required = pair_count(a.rows(), a.cols(), k, consecutive_only);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let type2 = staircase_type(a) == StaircaseType::TypeII;
    let betas: Vec<IndexSequence> = enumerate_sequences(k, a.cols(), consecutive_only)?.collect();
    let alphas = enumerate_sequences(k, a.rows(), consecutive_only)?;
    Ok(alphas.flat_map(move |alpha| {
        let betas = betas.clone();
        betas.into_iter().map(move |beta| {
            let query = MinorQuery::new(alpha.clone(), beta).expect("equal lengths");
            let value = minor(a, &query).expect("query in range");
            let nontrivial = is_nontrivial(a, &query, type2);
            let boundary = (query.alpha.is_consecutive() && query.beta.is_consecutive())
                .then(|| classify_boundary(a, &query).expect("consecutive query"));
            MinorItem {
                query,
                value,
                nontrivial,
                boundary,
            }
        })
    }))
}

/// Streams only the nontrivial minors of order `k` with their exact values,
/// in lexicographic order.
pub fn enumerate_nontrivial_minors(
    a: &RationalMatrix,
    k: usize,
    consecutive_only: bool,
    budget: u64,
) -> Result<impl Iterator<Item = (MinorQuery, Rat)> + '_> {
    Ok(enumerate_minors(a, k, consecutive_only, budget)?
        .filter(|item| item.nontrivial)
        .map(|item| (item.query, item.value)))
}
