//! Data-parallel scans over `(alpha, beta)` selection pairs.
//!
//! Verdict operations evaluate large batches of independent minors. These
//! kernels split the row-selection axis across workers while preserving the
//! external contract: results are always the lexicographically first hit (or
//! all hits in lexicographic order), independent of scheduling. With the
//! `parallel` feature disabled everything runs on the sequential fallback.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::seq::{enumerate_sequences, IndexSequence};

fn collect_axis(k: usize, n: usize, consecutive: bool) -> Vec<IndexSequence> {
    enumerate_sequences(k, n, consecutive)
        .expect("scan callers validate 1 <= k <= n")
        .collect()
}

/// Lexicographically first pair satisfying `pred`; sequential reference
/// implementation.
pub fn first_pair_seq<F>(
    m: usize,
    n: usize,
    k: usize,
    consecutive: bool,
    pred: F,
) -> Option<(IndexSequence, IndexSequence)>
where
    F: Fn(&IndexSequence, &IndexSequence) -> bool + Sync,
{
    let betas = collect_axis(k, n, consecutive);
    for alpha in enumerate_sequences(k, m, consecutive).expect("valid k") {
        if let Some(beta) = betas.iter().find(|beta| pred(&alpha, beta)) {
            return Some((alpha, beta.clone()));
        }
    }
    None
}

/// Lexicographically first pair satisfying `pred`, with the row axis
/// distributed across the rayon pool. `find_first` keeps the result
/// schedule-independent.
#[cfg(feature = "parallel")]
pub fn first_pair_par<F>(
    m: usize,
    n: usize,
    k: usize,
    consecutive: bool,
    pred: F,
) -> Option<(IndexSequence, IndexSequence)>
where
    F: Fn(&IndexSequence, &IndexSequence) -> bool + Sync,
{
    let alphas = collect_axis(k, m, consecutive);
    let betas = collect_axis(k, n, consecutive);
    let hit = alphas
        .par_iter()
        .find_first(|alpha| betas.iter().any(|beta| pred(alpha, beta)))?;
    let beta = betas.iter().find(|beta| pred(hit, beta))?;
    Some((hit.clone(), beta.clone()))
}

/// Dispatching entry point used by the verdict operations.
pub fn first_pair<F>(
    m: usize,
    n: usize,
    k: usize,
    consecutive: bool,
    pred: F,
) -> Option<(IndexSequence, IndexSequence)>
where
    F: Fn(&IndexSequence, &IndexSequence) -> bool + Sync,
{
    #[cfg(feature = "parallel")]
    {
        first_pair_par(m, n, k, consecutive, pred)
    }
    #[cfg(not(feature = "parallel"))]
    {
        first_pair_seq(m, n, k, consecutive, pred)
    }
}

/// All pairs satisfying `pred`, in lexicographic order; sequential reference
/// implementation.
pub fn collect_hits_seq<F>(
    m: usize,
    n: usize,
    k: usize,
    consecutive: bool,
    pred: F,
) -> Vec<(IndexSequence, IndexSequence)>
where
    F: Fn(&IndexSequence, &IndexSequence) -> bool + Sync,
{
    let betas = collect_axis(k, n, consecutive);
    let mut hits = Vec::new();
    for alpha in enumerate_sequences(k, m, consecutive).expect("valid k") {
        for beta in &betas {
            if pred(&alpha, beta) {
                hits.push((alpha.clone(), beta.clone()));
            }
        }
    }
    hits
}

/// All pairs satisfying `pred`, in lexicographic order, evaluated in
/// parallel across the row axis.
#[cfg(feature = "parallel")]
pub fn collect_hits_par<F>(
    m: usize,
    n: usize,
    k: usize,
    consecutive: bool,
    pred: F,
) -> Vec<(IndexSequence, IndexSequence)>
where
    F: Fn(&IndexSequence, &IndexSequence) -> bool + Sync,
{
    let alphas = collect_axis(k, m, consecutive);
    let betas = collect_axis(k, n, consecutive);
    alphas
        .par_iter()
        .flat_map_iter(|alpha| {
            betas
                .iter()
                .filter(|beta| pred(alpha, beta))
                .map(|beta| (alpha.clone(), beta.clone()))
                .collect::<Vec<_>>()
                .into_iter()
        })
        .collect()
}

pub fn collect_hits<F>(
    m: usize,
    n: usize,
    k: usize,
    consecutive: bool,
    pred: F,
) -> Vec<(IndexSequence, IndexSequence)>
where
    F: Fn(&IndexSequence, &IndexSequence) -> bool + Sync,
{
    #[cfg(feature = "parallel")]
    {
        collect_hits_par(m, n, k, consecutive, pred)
    }
    #[cfg(not(feature = "parallel"))]
    {
        collect_hits_seq(m, n, k, consecutive, pred)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_pair_is_lexicographic() {
        // Hit on every pair whose index sum is even; the first pair overall
        // is ((1,2),(1,2)) with sum 6.
        let pred = |a: &IndexSequence, b: &IndexSequence| {
            (a.indices().iter().sum::<usize>() + b.indices().iter().sum::<usize>()) % 2 == 0
        };
        let (a, b) = first_pair(4, 4, 2, false, pred).unwrap();
        assert_eq!(a.indices(), &[1, 2]);
        assert_eq!(b.indices(), &[1, 2]);
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let pred = |a: &IndexSequence, b: &IndexSequence| a.last() * b.last() > 18;
        let seq = collect_hits_seq(5, 5, 2, false, pred);
        let all = collect_hits(5, 5, 2, false, pred);
        assert_eq!(seq, all);
        assert_eq!(
            first_pair_seq(5, 5, 2, false, pred),
            first_pair(5, 5, 2, false, pred)
        );
    }

    #[test]
    fn no_hit_returns_none() {
        assert_eq!(first_pair(3, 3, 2, true, |_, _| false), None);
        assert!(collect_hits(3, 3, 2, true, |_, _| false).is_empty());
    }
}
