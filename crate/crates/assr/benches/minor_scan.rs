//! Sequential vs parallel minor-scan kernels on classification-sized inputs.
//!
//! Run with `cargo bench -p assr`. The parallel cases disappear when the
//! crate is built with `--no-default-features`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use assr::matrix::RationalMatrix;
use assr::minors::{is_nontrivial, minor, MinorQuery};
use assr::qr::{float_minor, mgs_qr};
use assr::scan;
use assr::seq::IndexSequence;
use assr::testgen::{generate, GenKind, GenSpec};

fn staircase_input(rows: usize, cols: usize, seed: u64) -> RationalMatrix {
    generate(&GenSpec {
        rows,
        cols,
        seed,
        kind: GenKind::StaircaseRandom,
    })
    .expect("valid spec")
}

fn nontrivial_zero_or_conflict(a: &RationalMatrix) -> impl Fn(&IndexSequence, &IndexSequence) -> bool + Sync + '_ {
    move |alpha, beta| {
        let q = MinorQuery::new(alpha.clone(), beta.clone()).expect("equal lengths");
        is_nontrivial(a, &q, false) && num_traits::Zero::is_zero(&minor(a, &q).expect("in range"))
    }
}

fn bench_exact_scan(c: &mut Criterion) {
    let a = staircase_input(10, 10, 7);
    let mut group = c.benchmark_group("exact_minor_scan");
    group.sample_size(10);
    for k in [3usize, 5] {
        group.bench_with_input(BenchmarkId::new("seq", k), &k, |b, &k| {
            b.iter(|| scan::collect_hits_seq(10, 10, k, false, nontrivial_zero_or_conflict(&a)))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("par", k), &k, |b, &k| {
            b.iter(|| scan::collect_hits_par(10, 10, k, false, nontrivial_zero_or_conflict(&a)))
        });
    }
    group.finish();
}

fn bench_float_scan(c: &mut Criterion) {
    let a = generate(&GenSpec {
        rows: 9,
        cols: 8,
        seed: 3,
        kind: GenKind::TpBidiagonal,
    })
    .expect("valid spec")
    .to_real();
    let qr = mgs_qr(&a).expect("full rank");
    let r = qr.r;
    let pred = |alpha: &IndexSequence, beta: &IndexSequence| {
        float_minor(&r, alpha.indices(), beta.indices()) < -1e-8
    };
    let mut group = c.benchmark_group("float_tp_scan");
    group.sample_size(10);
    group.bench_function("seq", |b| {
        b.iter(|| scan::collect_hits_seq(8, 8, 4, false, pred))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("par", |b| {
        b.iter(|| scan::collect_hits_par(8, 8, 4, false, pred))
    });
    group.finish();
}

criterion_group!(benches, bench_exact_scan, bench_float_scan);
criterion_main!(benches);
