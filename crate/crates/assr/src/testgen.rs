//! Deterministic fixtures and seeded corpus generators.
//!
//! All randomness comes from SplitMix64 with a single stream per generation
//! call; the generator algorithm is part of the external contract, so a
//! given seed reproduces the same matrix in any implementation.

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::{rat, rat_int, Rat};
use crate::seq::Sign;

/// SplitMix64 pseudo-random stream (Steele, Lea & Flood's mixing constants).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in `0..n` (plain reduction; distributional bias is
    /// irrelevant here, reproducibility is the contract).
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        self.next_u64() % n
    }

    /// Draw in the inclusive range `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// What a generation call produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    /// Truncated product of nonnegative bidiagonal factors: totally
    /// positive with full rank.
    TpBidiagonal,
    /// Random type-I staircase zero mask filled with nonzero entries.
    StaircaseRandom,
}

/// A reproducible generation request; the seed fully determines the output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub rows: usize,
    pub cols: usize,
    pub seed: u64,
    pub kind: GenKind,
}

/// The named golden matrices used throughout the test suites.
pub fn fixture(name: &str) -> Result<RationalMatrix> {
    match name {
        "example_2_7" => Ok(RationalMatrix::from_i64_rows(&[
            &[1, 1, 0, 0, 0],
            &[1, 2, 0, 0, 0],
            &[0, 1, 1, 1, 0],
            &[0, 0, 0, 1, 1],
            &[0, 0, 0, 2, 3],
            &[0, 0, 0, 4, 5],
            &[0, 0, 0, 0, 0],
        ])),
        "example_4_4" => RationalMatrix::from_rows(vec![
            vec![rat_int(-3), rat_int(-1), rat_int(0)],
            vec![rat_int(-2), rat_int(-5), rat_int(-2)],
            vec![rat(-1, 1_000_000), rat_int(-1), rat_int(-1)],
            vec![rat_int(0), rat_int(0), rat_int(-1)],
        ]),
        "example_4_7" => Ok(RationalMatrix::from_i64_rows(&[
            &[-1, -4, 0, 0, 0],
            &[-2, -10, -10, -16, -2],
            &[0, -6, -33, -60, -21],
            &[0, -8, -46, -92, -70],
            &[0, 0, -9, -60, -242],
            &[0, 0, -6, -60, -443],
        ])),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

pub const FIXTURE_NAMES: &[&str] = &["example_2_7", "example_4_4", "example_4_7"];

fn positive_small(rng: &mut SplitMix64) -> Rat {
    rat(rng.range_i64(1, 9), rng.range_i64(1, 9))
}

fn nonnegative_small(rng: &mut SplitMix64) -> Rat {
    rat(rng.range_i64(0, 9), rng.range_i64(1, 9))
}

fn lower_bidiagonal(s: usize, rng: &mut SplitMix64) -> RationalMatrix {
    let mut grid = vec![vec![Rat::from_integer(0.into()); s]; s];
    for (i, row) in grid.iter_mut().enumerate() {
        row[i] = positive_small(rng);
        if i > 0 {
            row[i - 1] = nonnegative_small(rng);
        }
    }
    RationalMatrix::from_rows(grid).expect("square grid")
}

fn diagonal_positive(s: usize, rng: &mut SplitMix64) -> RationalMatrix {
    let mut grid = vec![vec![Rat::from_integer(0.into()); s]; s];
    for (i, row) in grid.iter_mut().enumerate() {
        row[i] = positive_small(rng);
    }
    RationalMatrix::from_rows(grid).expect("square grid")
}

/// Totally positive full-rank matrix: the first `rows x cols` block of
/// `L1 L2 D U1 U2` with nonnegative bidiagonal factors and strictly
/// positive diagonals.
pub fn generate_tp(spec: &GenSpec) -> Result<RationalMatrix> {
    if spec.kind != GenKind::TpBidiagonal {
        return Err(Error::InvalidArgument(
            "generate_tp requires the tp_bidiagonal kind".into(),
        ));
    }
    if spec.rows == 0 || spec.cols == 0 {
        return Err(Error::InvalidArgument("empty generation shape".into()));
    }
    let s = spec.rows.max(spec.cols);
    let mut rng = SplitMix64::new(spec.seed);
    let l1 = lower_bidiagonal(s, &mut rng);
    let l2 = lower_bidiagonal(s, &mut rng);
    let d = diagonal_positive(s, &mut rng);
    let u1 = lower_bidiagonal(s, &mut rng).transpose();
    let u2 = lower_bidiagonal(s, &mut rng).transpose();
    let product = l1.mul(&l2)?.mul(&d)?.mul(&u1)?.mul(&u2)?;
    product.truncate(spec.rows, spec.cols)
}

/// Random type-I staircase matrix: a monotone zero mask below and above the
/// diagonal, every unmasked cell drawn from the nonzero integers -3..=3.
pub fn generate_staircase(spec: &GenSpec) -> Result<RationalMatrix> {
    if spec.kind != GenKind::StaircaseRandom {
        return Err(Error::InvalidArgument(
            "generate_staircase requires the staircase_random kind".into(),
        ));
    }
    if spec.rows == 0 || spec.cols == 0 {
        return Err(Error::InvalidArgument("empty generation shape".into()));
    }
    let (m, n) = (spec.rows, spec.cols);
    let mut rng = SplitMix64::new(spec.seed);
    // First all-zero row of each column (m + 1 = no zeros); nondecreasing
    // across columns so each zero's lower-left shadow stays zero.
    let mut col_cut = Vec::with_capacity(n);
    let mut prev = 2usize;
    for j in 1..=n {
        // Columns past the diagonal have no below-diagonal cells.
        let lo = prev.max(j + 1).min(m + 1);
        let cut = lo + rng.below((m + 1 - lo + 1) as u64) as usize;
        col_cut.push(cut);
        prev = cut;
    }
    // First all-zero column of each row, for the upper-right shadows.
    let mut row_cut = Vec::with_capacity(m);
    let mut prev = 2usize;
    for i in 1..=m {
        let lo = prev.max(i + 1).min(n + 1);
        let cut = lo + rng.below((n + 1 - lo + 1) as u64) as usize;
        row_cut.push(cut);
        prev = cut;
    }
    let mut grid = Vec::with_capacity(m);
    for i in 1..=m {
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            if i >= col_cut[j - 1] || j >= row_cut[i - 1] {
                row.push(Rat::from_integer(0.into()));
            } else {
                let magnitude = rng.range_i64(1, 3);
                let sign = if rng.below(2) == 0 { -1 } else { 1 };
                row.push(rat_int(sign * magnitude));
            }
        }
        grid.push(row);
    }
    RationalMatrix::from_rows(grid)
}

pub fn generate(spec: &GenSpec) -> Result<RationalMatrix> {
    match spec.kind {
        GenKind::TpBidiagonal => generate_tp(spec),
        GenKind::StaircaseRandom => generate_staircase(spec),
    }
}

/// A determinant-sign-preserving corpus transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignTransform {
    /// Entrywise negation: order-k minors scale by (-1)^k.
    Negate,
    /// Column reversal: order-k minors scale by (-1)^(k(k-1)/2).
    ReverseColumns,
}

/// Applies the transform and returns the per-order sign multipliers, so a
/// known signature predicts the transformed one.
pub fn sign_transform(a: &RationalMatrix, which: SignTransform) -> (RationalMatrix, Vec<Sign>) {
    let r = a.min_dim();
    match which {
        SignTransform::Negate => {
            let mult = (1..=r)
                .map(|k| if k % 2 == 0 { Sign::Plus } else { Sign::Minus })
                .collect();
            (a.neg(), mult)
        }
        SignTransform::ReverseColumns => {
            let mult = (1..=r)
                .map(|k| {
                    if (k * (k - 1) / 2) % 2 == 0 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect();
            (a.reverse_cols(), mult)
        }
    }
}
