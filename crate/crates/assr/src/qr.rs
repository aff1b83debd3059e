//! Column-oriented modified Gram-Schmidt QR factorization and structural
//! checks on the factors: total positivity of `R`, transfer of column
//! boundary minors to `Q` with their signs, and the Cauchy-Binet identity.
//!
//! The factorization itself is strictly sequential (the floating-point
//! result is bit-reproducible); the verification scans are pure and may run
//! on the parallel kernels.

use crate::classify::is_assr_reduced;
use crate::error::{Error, Result};
use crate::matrix::{RationalMatrix, RealMatrix};
use crate::minors::{classify_boundary, MinorQuery};
use crate::scan;
use crate::seq::{sequence_count, IndexSequence, Sign};
use crate::staircase::staircase_type;

/// Post-projection column norms below this fraction of the original column
/// norm are treated as numerical rank deficiency.
pub const MGS_RANK_TOL: f64 = 1e-12;

/// Default verification tolerance attached to a factorization.
pub const DEFAULT_QR_TOL: f64 = 1e-10;

/// A QR factorization: `Q` with orthonormal columns, `R` upper triangular
/// with strictly positive diagonal, and the tolerance used by the
/// verification routines.
#[derive(Debug, Clone, PartialEq)]
pub struct QRPair {
    pub q: RealMatrix,
    pub r: RealMatrix,
    pub tol: f64,
}

fn dot(u: &[f64], v: &[f64]) -> f64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

fn norm(v: &[f64]) -> f64 {
    dot(v, v).sqrt()
}

/// Column-oriented modified Gram-Schmidt: each new column is copied, then
/// sequentially reduced against every already finished orthonormal column,
/// then normalized. Requires `m >= n` and numerically independent columns.
pub fn mgs_qr(a: &RealMatrix) -> Result<QRPair> {
    let (m, n) = (a.rows(), a.cols());
    if m < n {
        return Err(Error::InvalidArgument(format!(
            "QR factorization requires m >= n, got {m}x{n}"
        )));
    }
    let mut q_cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut r = RealMatrix::zeros(n, n);
    for k in 1..=n {
        let mut v = a.column(k);
        let original_norm = norm(&v);
        for (i, q_done) in q_cols.iter().enumerate() {
            let rik = dot(q_done, &v);
            r.set(i + 1, k, rik);
            for (ve, qe) in v.iter_mut().zip(q_done) {
                *ve -= rik * qe;
            }
        }
        let rkk = norm(&v);
        if rkk <= MGS_RANK_TOL * original_norm {
            return Err(Error::NumericalRankDeficient { column: k });
        }
        r.set(k, k, rkk);
        for ve in v.iter_mut() {
            *ve /= rkk;
        }
        q_cols.push(v);
    }
    let mut q = RealMatrix::zeros(m, n);
    for (j, col) in q_cols.iter().enumerate() {
        for (i, &value) in col.iter().enumerate() {
            q.set(i + 1, j + 1, value);
        }
    }
    Ok(QRPair {
        q,
        r,
        tol: DEFAULT_QR_TOL,
    })
}

/// Largest entry of `Q^T Q - I` in absolute value.
pub fn orthonormality_residual(q: &RealMatrix) -> f64 {
    let n = q.cols();
    let mut worst = 0.0f64;
    for i in 1..=n {
        let ci = q.column(i);
        for j in 1..=n {
            let g = dot(&ci, &q.column(j)) - f64::from(u8::from(i == j));
            worst = worst.max(g.abs());
        }
    }
    worst
}

/// `max |Q^T Q - I| <= tol`.
pub fn verify_orthonormal(q: &RealMatrix, tol: f64) -> bool {
    orthonormality_residual(q) <= tol
}

/// Largest entry of `A - QR` in absolute value.
pub fn reconstruction_residual(a: &RealMatrix, qr: &QRPair) -> f64 {
    let (m, n) = (a.rows(), a.cols());
    let mut worst = 0.0f64;
    for i in 1..=m {
        for j in 1..=n {
            let prod: f64 = (1..=n).map(|k| qr.q.at(i, k) * qr.r.at(k, j)).sum();
            worst = worst.max((a.at(i, j) - prod).abs());
        }
    }
    worst
}

/// Floating determinant of a selected submatrix by Gaussian elimination
/// with partial pivoting. Deterministic: pivots are the first maximal
/// entries in column order.
#[allow(clippy::needless_range_loop)]
pub fn float_minor(a: &RealMatrix, rows: &[usize], cols: &[usize]) -> f64 {
    debug_assert_eq!(rows.len(), cols.len());
    let k = rows.len();
    let mut m: Vec<Vec<f64>> = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| a.at(i, j)).collect())
        .collect();
    let mut det = 1.0f64;
    for c in 0..k {
        let pivot = (c..k)
            .max_by(|&x, &y| m[x][c].abs().partial_cmp(&m[y][c].abs()).unwrap())
            .unwrap();
        if m[pivot][c] == 0.0 {
            return 0.0;
        }
        if pivot != c {
            m.swap(pivot, c);
            det = -det;
        }
        det *= m[c][c];
        for i in c + 1..k {
            let factor = m[i][c] / m[c][c];
            for j in c..k {
                m[i][j] -= factor * m[c][j];
            }
        }
    }
    det
}

/// A floating minor found below the acceptance threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct TpViolation {
    pub query: MinorQuery,
    pub value: f64,
    pub threshold: f64,
}

/// Outcome of the total-positivity scan over `R`.
#[derive(Debug, Clone, PartialEq)]
pub struct TpVerification {
    pub ok: bool,
    pub checked: u64,
    pub violations: Vec<TpViolation>,
}

/// Checks that every minor of the upper triangular `R` clears
/// `-tol * scale(k)`, where `scale(k)` is the product of the `k` largest
/// column norms of `R` (a per-order magnitude reference).
pub fn verify_r_tp(r: &RealMatrix, tol: f64, budget: u64) -> Result<TpVerification> {
    let n = r.cols();
    if r.rows() != n {
        return Err(Error::InvalidArgument(
            "total-positivity check expects a square R factor".into(),
        ));
    }
    for i in 2..=n {
        for j in 1..i {
            if r.at(i, j) != 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "R is not upper triangular at ({i}, {j})"
                )));
            }
        }
    }
    let required = (1..=n)
        .map(|k| {
            sequence_count(k, n, false).saturating_mul(sequence_count(k, n, false))
        })
        .fold(0u64, u64::saturating_add);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }

    let mut col_norms: Vec<f64> = (1..=n).map(|j| norm(&r.column(j))).collect();
    col_norms.sort_by(|a, b| b.partial_cmp(a).unwrap());

    let mut checked = 0u64;
    let mut violations = Vec::new();
    for k in 1..=n {
        checked += sequence_count(k, n, false).pow(2);
        let scale: f64 = col_norms[..k].iter().product();
        let threshold = -tol * scale.max(1.0);
        let hits = scan::collect_hits(n, n, k, false, |alpha, beta| {
            float_minor(r, alpha.indices(), beta.indices()) < threshold
        });
        for (alpha, beta) in hits {
            let value = float_minor(r, alpha.indices(), beta.indices());
            violations.push(TpViolation {
                query: MinorQuery::new(alpha, beta).expect("equal lengths"),
                value,
                threshold,
            });
        }
    }
    Ok(TpVerification {
        ok: violations.is_empty(),
        checked,
        violations,
    })
}

/// A signed boundary minor of `Q` that failed its strict-sign requirement.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryViolation {
    pub query: MinorQuery,
    pub value: f64,
    pub expected: Sign,
}

/// Outcome of the boundary-minor transfer check.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundarySignReport {
    /// Number of column boundary minors examined.
    pub checked: u64,
    pub violations: Vec<BoundaryViolation>,
    /// Column boundary selections whose preceding `Q` column slice was not
    /// numerically zero.
    pub zero_block_failures: Vec<MinorQuery>,
}

impl BoundarySignReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty() && self.zero_block_failures.is_empty()
    }
}

/// For every consecutive column boundary minor of a type-I staircase ASSR
/// matrix `A`, verifies on the factor `Q` that (a) the column slice directly
/// left of the block is numerically zero and (b) the corresponding minor of
/// `Q` carries the signature sign strictly.
pub fn check_boundary_transfer(
    a: &RationalMatrix,
    qr: &QRPair,
    budget: u64,
) -> Result<BoundarySignReport> {
    if !staircase_type(a).prefers_type1() {
        return Err(Error::InvalidArgument(
            "boundary transfer is stated for type-I staircase matrices".into(),
        ));
    }
    if a.rows() != qr.q.rows() || a.cols() != qr.q.cols() {
        return Err(Error::InvalidArgument(
            "factorization shape does not match the matrix".into(),
        ));
    }
    let verdict = is_assr_reduced(a, budget)?;
    let Some(signature) = verdict.signature() else {
        return Err(Error::NotAssr(
            "boundary transfer requires an ASSR matrix".into(),
        ));
    };

    let (m, n) = (a.rows(), a.cols());
    let zero_tol = 1e-10 * qr.q.max_abs();
    let mut checked = 0u64;
    let mut violations = Vec::new();
    let mut zero_block_failures = Vec::new();
    for k in 1..=n.min(m) {
        for start_row in 1..=m - k + 1 {
            for start_col in 1..=n - k + 1 {
                let alpha = IndexSequence::consecutive(start_row, k, m)?;
                let beta = IndexSequence::consecutive(start_col, k, n)?;
                let query = MinorQuery::new(alpha, beta)?;
                let flags = classify_boundary(a, &query)?;
                if !flags.column_boundary {
                    continue;
                }
                checked += 1;
                if start_col > 1 {
                    let leaks = (0..k).any(|t| {
                        qr.q.at(start_row + t, start_col - 1).abs() > zero_tol
                    });
                    if leaks {
                        zero_block_failures.push(query.clone());
                    }
                }
                let value = float_minor(&qr.q, query.alpha().indices(), query.beta().indices());
                let expected = signature.sign(k);
                if f64::from(expected.as_i8()) * value <= qr.tol {
                    violations.push(BoundaryViolation {
                        query,
                        value,
                        expected,
                    });
                }
            }
        }
    }
    Ok(BoundarySignReport {
        checked,
        violations,
        zero_block_failures,
    })
}

/// `|det A[alpha|beta] - sum_w det Q[alpha|w] det R[w|beta]|` in floating
/// arithmetic; the summation runs over increasing sequences in lexicographic
/// order with a fixed sequential sum.
pub fn cauchy_binet_residual(
    a: &RealMatrix,
    qr: &QRPair,
    query: &MinorQuery,
    budget: u64,
) -> Result<f64> {
    let n = qr.r.cols();
    let k = query.order();
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "selection order {k} exceeds the inner dimension {n}"
        )));
    }
    if query.alpha().last() > a.rows() || query.beta().last() > a.cols() {
        return Err(Error::InvalidArgument(
            "selection out of range for the matrix".into(),
        ));
    }
    let terms = sequence_count(k, n, false);
    if terms > budget {
        return Err(Error::BudgetExceeded {
            required: terms,
            budget,
        });
    }
    let direct = float_minor(a, query.alpha().indices(), query.beta().indices());
    let mut total = 0.0f64;
    for omega in crate::seq::enumerate_sequences(k, n, false)? {
        let dq = float_minor(&qr.q, query.alpha().indices(), omega.indices());
        let dr = float_minor(&qr.r, omega.indices(), query.beta().indices());
        total += dq * dr;
    }
    Ok((direct - total).abs())
}
