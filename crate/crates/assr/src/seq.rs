//! Increasing index sequences and signature vectors.

use crate::error::{Error, Result};

/// Strictly increasing 1-based index sequence bounded by `n`; an element of
/// the set of increasing length-`k` sequences over `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSequence {
    indices: Vec<usize>,
    bound: usize,
}

impl IndexSequence {
    pub fn new(indices: Vec<usize>, bound: usize) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidArgument(
                "index sequence must be nonempty".into(),
            ));
        }
        if indices[0] == 0 || *indices.last().unwrap() > bound {
            return Err(Error::InvalidArgument(format!(
                "indices {indices:?} out of range 1..={bound}"
            )));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(format!(
                "indices {indices:?} are not strictly increasing"
            )));
        }
        Ok(Self { indices, bound })
    }

    /// The consecutive run `start, start+1, ..., start+k-1`.
    pub fn consecutive(start: usize, k: usize, bound: usize) -> Result<Self> {
        Self::new((start..start + k).collect(), bound)
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// 1-based: `self.get(t)` is the `t`-th index.
    pub fn get(&self, t: usize) -> usize {
        self.indices[t - 1]
    }

    pub fn first(&self) -> usize {
        self.indices[0]
    }

    pub fn last(&self) -> usize {
        *self.indices.last().unwrap()
    }

    /// Gap measure: `last - first - (k - 1)`; zero exactly for consecutive
    /// sequences (and for singletons by convention).
    pub fn gap(&self) -> usize {
        self.last() - self.first() - (self.len() - 1)
    }

    pub fn is_consecutive(&self) -> bool {
        self.gap() == 0
    }
}

impl std::fmt::Display for IndexSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (pos, v) in self.indices.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Streaming lexicographic enumeration of increasing index sequences of
/// length `k` bounded by `n`; `consecutive_only` restricts to gap zero.
pub fn enumerate_sequences(
    k: usize,
    n: usize,
    consecutive_only: bool,
) -> Result<impl Iterator<Item = IndexSequence>> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!(
            "sequence length {k} out of range 1..={n}"
        )));
    }
    Ok(SequenceIter {
        next: Some((1..=k).collect()),
        k,
        n,
        consecutive_only,
    })
}

struct SequenceIter {
    next: Option<Vec<usize>>,
    k: usize,
    n: usize,
    consecutive_only: bool,
}

impl Iterator for SequenceIter {
    type Item = IndexSequence;

    fn next(&mut self) -> Option<IndexSequence> {
        let current = self.next.take()?;
        let item = IndexSequence {
            indices: current.clone(),
            bound: self.n,
        };
        self.next = if self.consecutive_only {
            (current[0] + self.k <= self.n).then(|| {
                let start = current[0] + 1;
                (start..start + self.k).collect()
            })
        } else {
            let mut ids = current;
            // Rightmost index that can still advance.
            let mut pos = self.k;
            while pos > 0 && ids[pos - 1] == self.n - (self.k - pos) {
                pos -= 1;
            }
            (pos > 0).then(|| {
                ids[pos - 1] += 1;
                for t in pos..self.k {
                    ids[t] = ids[t - 1] + 1;
                }
                ids
            })
        };
        Some(item)
    }
}

/// Number of increasing sequences of length `k` bounded by `n`, saturating
/// at `u64::MAX`.
pub fn sequence_count(k: usize, n: usize, consecutive_only: bool) -> u64 {
    if k == 0 || k > n {
        return 0;
    }
    if consecutive_only {
        return (n - k + 1) as u64;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// One sign of a signature sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(value: i64) -> Option<Sign> {
        match value.signum() {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `self` raised to the `k`-th power.
    pub fn pow(self, k: usize) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => {
                if k.is_multiple_of(2) {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            }
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// Signature sequence: one sign per minor order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature(Vec<Sign>);

impl Signature {
    pub fn new(signs: Vec<Sign>) -> Self {
        Self(signs)
    }

    pub fn all_plus(r: usize) -> Self {
        Self(vec![Sign::Plus; r])
    }

    pub fn from_i8(signs: &[i8]) -> Self {
        Self(
            signs
                .iter()
                .map(|&s| if s >= 0 { Sign::Plus } else { Sign::Minus })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sign for order `k`, 1-based.
    pub fn sign(&self, k: usize) -> Sign {
        self.0[k - 1]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn is_all_plus(&self) -> bool {
        self.0.iter().all(|&s| s == Sign::Plus)
    }

    /// First `k` orders.
    pub fn truncate(&self, k: usize) -> Signature {
        Signature(self.0[..k].to_vec())
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (pos, s) in self.0.iter().enumerate() {
            if pos > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", s.as_i8())?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(ids: &[usize], n: usize) -> IndexSequence {
        IndexSequence::new(ids.to_vec(), n).unwrap()
    }

    #[test]
    fn gap_examples() {
        assert_eq!(seq(&[1, 2, 3], 5).gap(), 0);
        assert_eq!(seq(&[1], 5).gap(), 0);
        assert_eq!(seq(&[2, 4, 7], 7).gap(), 3);
    }

    #[test]
    fn enumerates_all_pairs_of_three() {
        let got: Vec<Vec<usize>> = enumerate_sequences(2, 3, false)
            .unwrap()
            .map(|s| s.indices().to_vec())
            .collect();
        assert_eq!(got, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn enumerates_consecutive_windows() {
        let got: Vec<Vec<usize>> = enumerate_sequences(2, 4, true)
            .unwrap()
            .map(|s| s.indices().to_vec())
            .collect();
        assert_eq!(got, vec![vec![1, 2], vec![2, 3], vec![3, 4]]);
    }

    #[test]
    fn enumerates_single_full_sequence() {
        let got: Vec<_> = enumerate_sequences(3, 3, false).unwrap().collect();
        assert_eq!(got, vec![seq(&[1, 2, 3], 3)]);
    }

    #[test]
    fn rejects_k_larger_than_n() {
        assert!(enumerate_sequences(4, 3, false).is_err());
        assert!(enumerate_sequences(0, 3, false).is_err());
    }

    #[test]
    fn counts_match_enumeration() {
        for n in 1..=7 {
            for k in 1..=n {
                for consecutive in [false, true] {
                    let counted = sequence_count(k, n, consecutive);
                    let listed = enumerate_sequences(k, n, consecutive).unwrap().count();
                    assert_eq!(counted, listed as u64, "k={k} n={n} {consecutive}");
                }
            }
        }
    }

    #[test]
    fn rejects_invalid_sequences() {
        assert!(IndexSequence::new(vec![], 3).is_err());
        assert!(IndexSequence::new(vec![0, 1], 3).is_err());
        assert!(IndexSequence::new(vec![1, 1], 3).is_err());
        assert!(IndexSequence::new(vec![2, 1], 3).is_err());
        assert!(IndexSequence::new(vec![1, 4], 3).is_err());
    }

    #[test]
    fn signature_display() {
        let sig = Signature::from_i8(&[-1, 1, -1]);
        assert_eq!(sig.to_string(), "(-1, 1, -1)");
        assert!(!sig.is_all_plus());
        assert!(Signature::all_plus(3).is_all_plus());
    }
}
