//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its runtime (visible with `--nocapture`). Tolerances are pinned in the
//! assertions.

use std::time::{Duration, Instant};

use assr::classify::{
    check_signature_constraint, compute_h, exact_rank, is_assr_full, is_assr_reduced, is_sr,
};
use assr::matrix::{RationalMatrix, RealMatrix};
use assr::minors::{det_exact, laplace_det, MinorQuery, DEFAULT_BUDGET};
use assr::qr::{cauchy_binet_residual, check_boundary_transfer, mgs_qr, verify_r_tp, QRPair};
use assr::rational::{rat, rat_int};
use assr::seq::Signature;
use assr::staircase::{staircase_type, zero_pattern};
use assr::testgen::{fixture, generate, GenKind, GenSpec, SplitMix64};

fn report(criterion: &str, start: Instant, detail: &str) {
    println!(
        "acceptance {criterion}: PASS ({detail}) [{:.1} ms]",
        start.elapsed().as_secs_f64() * 1e3
    );
}

fn index_set(values: &[usize]) -> String {
    let parts: Vec<String> = values.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

#[test]
fn criterion_01_staircase_pattern_reproduction() {
    let a = fixture("example_2_7").unwrap();
    let start = Instant::now();
    let p = zero_pattern(&a).unwrap();
    let line = format!(
        "I = {}; J = {}; Î = {}; Ĵ = {}",
        index_set(p.i_list()),
        index_set(p.j_list()),
        index_set(p.i_hat()),
        index_set(p.j_hat()),
    );
    let elapsed = start.elapsed();
    assert_eq!(
        line,
        "I = {1,3,4,7}; J = {1,2,4,6}; Î = {1,3,4,8}; Ĵ = {1,3,5,6}"
    );
    assert!(elapsed < Duration::from_millis(10), "took {elapsed:?}");
    report("1 (pattern reproduction)", start, &line);
}

fn printed_q_4_4() -> RealMatrix {
    RealMatrix::from_f64_rows(&[
        &[-0.832050294337812, 0.534522583680626, -0.068278727592371],
        &[-0.554700196225208, -0.801783741890443, 0.102418313294977],
        &[-0.000000277350098, -0.267260993741225, -0.443812838882511],
        &[0.0, 0.0, -0.887625297354253],
    ])
}

#[allow(clippy::excessive_precision)]
fn printed_r_4_4() -> RealMatrix {
    RealMatrix::from_f64_rows(&[
        &[3.605551275464128, 3.605551552813948, 1.109400669800514],
        &[0.0, 3.741657119512813, 1.870828477522111],
        &[0.0, 0.0, 1.126601509646810],
    ])
}

fn assert_matrix_close(got: &RealMatrix, expected: &RealMatrix, tol: f64, what: &str) {
    assert_eq!((got.rows(), got.cols()), (expected.rows(), expected.cols()));
    for i in 1..=got.rows() {
        for j in 1..=got.cols() {
            let d = (got.at(i, j) - expected.at(i, j)).abs();
            assert!(
                d <= tol,
                "{what} entry ({i},{j}): got {} expected {} (diff {d:.3e} > {tol:.0e})",
                got.at(i, j),
                expected.at(i, j)
            );
        }
    }
}

#[test]
fn criterion_02_qr_fixture_fifteen_decimals() {
    let a = fixture("example_4_4").unwrap().to_real();
    let start = Instant::now();
    let qr = mgs_qr(&a).unwrap();
    let elapsed = start.elapsed();
    assert_matrix_close(&qr.q, &printed_q_4_4(), 1e-12, "Q");
    assert_matrix_close(&qr.r, &printed_r_4_4(), 1e-12, "R");
    assert!(elapsed < Duration::from_millis(10), "took {elapsed:?}");
    report("2 (QR to 15 decimals)", start, "max error <= 1e-12");
}

fn printed_q_4_7() -> RealMatrix {
    RealMatrix::from_f64_rows(&[
        &[-0.4472, 0.0797, -0.0481, 0.0987, -0.7699],
        &[-0.8944, -0.0398, 0.0240, -0.0493, 0.3849],
        &[0.0, -0.5976, 0.0852, -0.0887, 0.3285],
        &[0.0, -0.7968, -0.0699, 0.0789, -0.3426],
        &[0.0, 0.0, -0.8258, 0.5313, 0.1684],
        &[0.0, 0.0, -0.5505, -0.8315, -0.0742],
    ])
}

fn printed_r_4_7() -> RealMatrix {
    RealMatrix::from_f64_rows(&[
        &[2.2361, 10.7331, 8.9443, 14.3108, 1.7889],
        &[0.0, 10.0399, 56.7734, 109.8017, 68.4069],
        &[0.0, 0.0, 10.8989, 83.5122, 446.7713],
        &[0.0, 0.0, 0.0, 16.8671, 236.2195],
        &[0.0, 0.0, 0.0, 0.0, 8.4289],
    ])
}

#[test]
fn criterion_03_qr_fixture_four_decimals() {
    let a = fixture("example_4_7").unwrap().to_real();
    let start = Instant::now();
    let qr = mgs_qr(&a).unwrap();
    let elapsed = start.elapsed();
    assert_matrix_close(&qr.q, &printed_q_4_7(), 5e-5, "Q");
    assert_matrix_close(&qr.r, &printed_r_4_7(), 5e-5, "R");
    assert!(elapsed < Duration::from_millis(10), "took {elapsed:?}");
    report("3 (QR to 4 decimals)", start, "max error <= 5e-5");
}

#[test]
fn criterion_04_signature_and_tp_r_factor() {
    let a = fixture("example_4_4").unwrap();
    let start = Instant::now();
    let verdict = is_sr(&a, DEFAULT_BUDGET).unwrap();
    assert_eq!(verdict.signature(), Some(&Signature::from_i8(&[-1, 1, -1])));
    let qr = mgs_qr(&a.to_real()).unwrap();
    let tp = verify_r_tp(&qr.r, 1e-10, DEFAULT_BUDGET).unwrap();
    assert!(tp.ok, "violations: {:?}", tp.violations);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_millis(100), "took {elapsed:?}");
    report(
        "4 (signature + TP R factor)",
        start,
        "signature (-1, 1, -1); R totally positive at 1e-10",
    );
}

/// Seeded corpus shared by criteria 5-7: random integer matrices with
/// entries in -3..=3 and sides up to 5, filtered to full rank and staircase.
fn corpus() -> Vec<RationalMatrix> {
    let mut rng = SplitMix64::new(1729);
    let mut out = Vec::new();
    while out.len() < 1000 {
        let m = 1 + rng.below(5) as usize;
        let n = 1 + rng.below(5) as usize;
        let a = RationalMatrix::from_fn(m, n, |_, _| rat_int(rng.range_i64(-3, 3)));
        if exact_rank(&a) == a.min_dim() && staircase_type(&a).is_staircase() {
            out.push(a);
        }
    }
    out
}

#[test]
fn criterion_05_reduced_characterization_oracle() {
    let start = Instant::now();
    let corpus = corpus();
    let mut assr_count = 0;
    for a in &corpus {
        let full = is_assr_full(a, DEFAULT_BUDGET).unwrap();
        let reduced = is_assr_reduced(a, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            full.is_signed(),
            reduced.is_signed(),
            "presence mismatch on {a:?}"
        );
        assert_eq!(
            full.signature(),
            reduced.signature(),
            "signature mismatch on {a:?}"
        );
        if full.is_signed() {
            assr_count += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    report(
        "5 (full == reduced)",
        start,
        &format!("{} matrices, {assr_count} ASSR, 100% agreement", corpus.len()),
    );
}

#[test]
fn criterion_06_transpose_invariance() {
    let start = Instant::now();
    let corpus = corpus();
    let mut comparable = 0usize;
    let mut out_of_contract = 0usize;
    for a in &corpus {
        let sig = is_assr_full(a, DEFAULT_BUDGET).unwrap().signature().cloned();
        let t = a.transpose();
        // The transpose of a rectangular type-II staircase matrix need not
        // be staircase at all (e.g. a column vector with a leading zero);
        // the classification of such a transpose is outside the operation's
        // contract and there is nothing to compare against.
        if !staircase_type(&t).is_staircase() {
            out_of_contract += 1;
            continue;
        }
        let t_sig = is_assr_full(&t, DEFAULT_BUDGET).unwrap().signature().cloned();
        assert_eq!(
            sig.is_some(),
            t_sig.is_some(),
            "presence changed under transpose for {a:?}"
        );
        assert_eq!(sig, t_sig, "signature changed under transpose for {a:?}");
        comparable += 1;
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    assert!(comparable >= 900, "too few comparable pairs: {comparable}");
    report(
        "6 (transpose invariance)",
        start,
        &format!(
            "{comparable} comparable pairs, 100% invariant; {out_of_contract} transposes not staircase (outside contract)"
        ),
    );
}

#[test]
fn criterion_07_signature_prefix_constraint() {
    let start = Instant::now();
    let corpus = corpus();
    let mut checked = 0;
    for a in &corpus {
        let verdict = is_assr_reduced(a, DEFAULT_BUDGET).unwrap();
        let Some(sig) = verdict.signature() else {
            continue;
        };
        // The prefix constraint is a statement about type-I staircase
        // matrices. A type-II matrix enters through its row reversal, whose
        // order-k minors pick up the reversal parity (-1)^(k(k-1)/2).
        let (sig, h) = if staircase_type(a).prefers_type1() {
            (sig.clone(), compute_h(a))
        } else {
            let transformed: Vec<assr::Sign> = sig
                .signs()
                .iter()
                .enumerate()
                .map(|(idx, &s)| {
                    let k = idx + 1;
                    if (k * (k - 1) / 2) % 2 == 0 {
                        s
                    } else {
                        s * assr::Sign::Minus
                    }
                })
                .collect();
            (Signature::new(transformed), compute_h(&a.reverse_rows()))
        };
        if h.is_none() {
            continue;
        }
        assert!(
            check_signature_constraint(&sig, h, a.min_dim()),
            "prefix constraint violated: {a:?} signature {sig} h {h:?}"
        );
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    assert!(checked > 50, "too few ASSR-with-zero matrices: {checked}");
    report(
        "7 (signature prefix constraint)",
        start,
        &format!("{checked} ASSR matrices with zero entries, zero violations"),
    );
}

#[test]
fn criterion_08_tp_r_factors_of_generated_matrices() {
    let start = Instant::now();
    let shapes = [(3, 3), (4, 3), (4, 4), (5, 4), (5, 5), (6, 5)];
    let mut count = 0;
    let mut seed = 0u64;
    while count < 100 {
        let (rows, cols) = shapes[(seed % shapes.len() as u64) as usize];
        let a = generate(&GenSpec {
            rows,
            cols,
            seed,
            kind: GenKind::TpBidiagonal,
        })
        .unwrap();
        seed += 1;
        let qr = mgs_qr(&a.to_real()).unwrap();
        let check = verify_r_tp(&qr.r, 1e-8, DEFAULT_BUDGET).unwrap();
        assert!(
            check.ok,
            "seed {} shape {rows}x{cols}: violations {:?}",
            seed - 1,
            check.violations
        );
        count += 1;
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    report(
        "8 (R factors totally positive)",
        start,
        "100 generated matrices, zero failures at relative 1e-8",
    );
}

#[test]
fn criterion_09_boundary_transfer_on_qr_fixture() {
    let a = fixture("example_4_7").unwrap();
    let start = Instant::now();
    let qr = mgs_qr(&a.to_real()).unwrap();
    let transfer = check_boundary_transfer(&a, &qr, DEFAULT_BUDGET).unwrap();
    assert!(transfer.violations.is_empty(), "{:?}", transfer.violations);
    assert!(
        transfer.zero_block_failures.is_empty(),
        "{:?}",
        transfer.zero_block_failures
    );
    // The negative side: A[2,3 | 3,4] is a row boundary minor (the top
    // slice A[1 | 3,4] vanishes), yet its zero block does not transfer to
    // Q, whose printed slice is (-0.0481, 0.0987).
    let row_block =
        MinorQuery::from_indices(&[2, 3], &[3, 4], a.rows(), a.cols()).unwrap();
    assert!(assr::classify_boundary(&a, &row_block).unwrap().row_boundary);
    assert!(a.is_zero_at(1, 3) && a.is_zero_at(1, 4));
    assert!((qr.q.at(1, 3) - (-0.0481)).abs() <= 5e-5);
    assert!((qr.q.at(1, 4) - 0.0987).abs() <= 5e-5);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_millis(100), "took {elapsed:?}");
    report(
        "9 (boundary transfer)",
        start,
        &format!(
            "{} column boundary minors, zero violations; row-boundary non-transfer reproduced",
            transfer.checked
        ),
    );
}

#[test]
fn criterion_10_determinant_oracle() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(271828);
    for trial in 0..2000 {
        let m = 5 + rng.below(3) as usize;
        let n = 5 + rng.below(3) as usize;
        let a = RationalMatrix::from_fn(m, n, |_, _| {
            rat(rng.range_i64(-9, 9), rng.range_i64(1, 9))
        });
        let k = 1 + rng.below(5) as usize;
        let rows = sample_indices(&mut rng, m, k);
        let cols = sample_indices(&mut rng, n, k);
        let sub = a.submatrix(&rows, &cols);
        assert_eq!(
            det_exact(&sub),
            laplace_det(&sub),
            "trial {trial}: {rows:?} x {cols:?} of {a:?}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    report(
        "10 (determinant oracle)",
        start,
        "2000 random minors, Bareiss == Laplace exactly",
    );
}

fn sample_indices(rng: &mut SplitMix64, n: usize, k: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (1..=n).collect();
    for t in 0..k {
        let pick = t + rng.below((n - t) as u64) as usize;
        pool.swap(t, pick);
    }
    let mut chosen = pool[..k].to_vec();
    chosen.sort_unstable();
    chosen
}

#[test]
fn criterion_11_cauchy_binet_residuals() {
    let start = Instant::now();
    let fixtures: Vec<(RationalMatrix, QRPair)> = ["example_4_4", "example_4_7"]
        .iter()
        .map(|name| {
            let a = fixture(name).unwrap();
            let qr = mgs_qr(&a.to_real()).unwrap();
            (a, qr)
        })
        .collect();
    let mut rng = SplitMix64::new(314159);
    let factorial = [1.0, 1.0, 2.0, 6.0];
    for trial in 0..100 {
        let (a, qr) = &fixtures[trial % fixtures.len()];
        let real = a.to_real();
        let k = 1 + rng.below(3) as usize;
        let rows = sample_indices(&mut rng, real.rows(), k);
        let cols = sample_indices(&mut rng, real.cols(), k);
        let query = MinorQuery::from_indices(&rows, &cols, real.rows(), real.cols()).unwrap();
        let residual = cauchy_binet_residual(&real, qr, &query, DEFAULT_BUDGET).unwrap();
        let scale = factorial[k] * real.max_abs().powi(k as i32);
        assert!(
            residual <= 1e-9 * scale,
            "trial {trial}: residual {residual:.3e} > 1e-9 * {scale:.3e}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    report(
        "11 (Cauchy-Binet)",
        start,
        "100 seeded queries over both QR fixtures within 1e-9 * scale",
    );
}
