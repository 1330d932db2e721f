//! Error patterns and weight-ordered pattern enumeration.

use alloc::vec::Vec;
use core::fmt;

/// Errors from pattern construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternError {
    /// Support indices must be strictly increasing.
    NotSorted,
    /// An index is not below the code length.
    OutOfRange { index: usize, n: usize },
}

impl fmt::Display for PatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternError::NotSorted => write!(f, "support must be strictly increasing"),
            PatternError::OutOfRange { index, n } => {
                write!(f, "support index {index} not below code length {n}")
            }
        }
    }
}

impl core::error::Error for PatternError {}

/// Support set of flipped bits of one BSC realization.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ErrorPattern {
    support: Vec<usize>,
    n: usize,
}

impl ErrorPattern {
    pub fn from_sorted(support: Vec<usize>, n: usize) -> Result<Self, PatternError> {
        if let Some(w) = support.windows(2).find(|w| w[0] >= w[1]) {
            let _ = w;
            return Err(PatternError::NotSorted);
        }
        if let Some(&index) = support.iter().find(|&&i| i >= n) {
            return Err(PatternError::OutOfRange { index, n });
        }
        Ok(ErrorPattern { support, n })
    }

    /// Sorts and validates an arbitrary index list.
    pub fn from_indices(mut indices: Vec<usize>, n: usize) -> Result<Self, PatternError> {
        indices.sort_unstable();
        Self::from_sorted(indices, n)
    }

    pub fn empty(n: usize) -> Self {
        ErrorPattern { support: Vec::new(), n }
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.support.len()
    }

    /// The received word under all-zero transmission.
    pub fn to_word(&self) -> Vec<u8> {
        let mut word = alloc::vec![0u8; self.n];
        for &i in &self.support {
            word[i] = 1;
        }
        word
    }

    /// Writes the received word into `buf` (which must have length `n`).
    pub fn write_word(&self, buf: &mut [u8]) {
        buf.fill(0);
        for &i in &self.support {
            buf[i] = 1;
        }
    }

    /// The pattern with every index mapped through `f` (e.g. a code
    /// automorphism); `f` must stay in range and injective.
    pub fn mapped(&self, f: impl Fn(usize) -> usize) -> Result<Self, PatternError> {
        Self::from_indices(self.support.iter().map(|&i| f(i)).collect(), self.n)
    }
}

/// Binomial coefficient in u128; panics on overflow (far beyond any
/// sweep this crate runs).
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128).expect("binomial overflow");
        acc /= (i + 1) as u128;
    }
    acc
}

/// All weight-`t` supports over `[0, n)` in lexicographic order, each
/// exactly once.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    t: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, t: usize) -> Self {
        let current = (t <= n).then(|| (0..t).collect());
        Combinations { n, t, current }
    }

    /// Start from the combination of lexicographic rank `rank`
    /// (combinatorial number system).
    pub fn from_rank(n: usize, t: usize, mut rank: u128) -> Self {
        if t > n || rank >= binomial(n, t) {
            return Combinations { n, t, current: None };
        }
        let mut support = Vec::with_capacity(t);
        let mut v = 0usize;
        for i in 0..t {
            loop {
                let with_v = binomial(n - 1 - v, t - 1 - i);
                if rank < with_v {
                    support.push(v);
                    v += 1;
                    break;
                }
                rank -= with_v;
                v += 1;
            }
        }
        Combinations { n, t, current: Some(support) }
    }

    /// Advance `current` to its lexicographic successor in place;
    /// returns false when exhausted.
    fn advance(&mut self) -> bool {
        let Some(ref mut c) = self.current else { return false };
        if self.t == 0 {
            self.current = None;
            return false;
        }
        let mut i = self.t;
        while i > 0 {
            i -= 1;
            if c[i] != i + self.n - self.t {
                c[i] += 1;
                for j in i + 1..self.t {
                    c[j] = c[j - 1] + 1;
                }
                return true;
            }
        }
        self.current = None;
        false
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        self.advance();
        Some(out)
    }
}

/// Iterator over weight-`t` error patterns of a length-`n` code, in
/// lexicographic order.
pub fn enumerate_patterns(n: usize, t: usize) -> impl Iterator<Item = ErrorPattern> {
    Combinations::new(n, t).map(move |support| {
        ErrorPattern::from_sorted(support, n).expect("combinations are sorted and in range")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn validation_rejects_unsorted_and_out_of_range() {
        assert_eq!(
            ErrorPattern::from_sorted(vec![2, 1], 5).unwrap_err(),
            PatternError::NotSorted
        );
        assert_eq!(
            ErrorPattern::from_sorted(vec![5], 5).unwrap_err(),
            PatternError::OutOfRange { index: 5, n: 5 }
        );
        assert!(ErrorPattern::from_indices(vec![3, 1], 5).is_ok());
    }

    #[test]
    fn weight_zero_is_a_single_empty_pattern() {
        let all: Vec<_> = enumerate_patterns(9, 0).collect();
        assert_eq!(all.len(), 1);
        assert!(all[0].is_empty());
    }

    #[test]
    fn nine_choose_three_is_84_and_starts_lexicographically() {
        let all: Vec<_> = enumerate_patterns(9, 3).collect();
        assert_eq!(all.len(), 84);
        assert_eq!(all[0].support(), &[0, 1, 2]);
        assert_eq!(all[83].support(), &[6, 7, 8]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(9, 3), 84);
        assert_eq!(binomial(155, 1), 155);
        assert_eq!(binomial(155, 2), 11_935);
        assert_eq!(binomial(155, 3), 608_685);
        assert_eq!(binomial(155, 5), 698_526_906);
        assert_eq!(binomial(4, 7), 0);
    }

    #[test]
    fn unranking_agrees_with_enumeration() {
        let all: Vec<_> = Combinations::new(7, 3).collect();
        assert_eq!(all.len() as u128, binomial(7, 3));
        for (rank, expected) in all.iter().enumerate() {
            let mut it = Combinations::from_rank(7, 3, rank as u128);
            assert_eq!(it.next().as_ref(), Some(expected), "rank {rank}");
        }
        assert!(Combinations::from_rank(7, 3, binomial(7, 3)).next().is_none());
    }

    #[test]
    fn word_round_trip() {
        let p = ErrorPattern::from_sorted(vec![0, 4], 6).unwrap();
        assert_eq!(p.to_word(), vec![1, 0, 0, 0, 1, 0]);
        let mut buf = vec![9u8; 6];
        p.write_word(&mut buf);
        assert_eq!(buf, vec![1, 0, 0, 0, 1, 0]);
    }
}
