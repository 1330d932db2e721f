//! The finite message alphabet of a multilevel decoder.
//!
//! Messages take values in `{0, ±L1, ..., ±LM}` with `L1 < ... < LM`, and
//! the variable-node rule maps a running sum back into the alphabet with
//! the threshold quantizer [`LevelAlphabet::quantize`]. Channel values are
//! `±C`. All values are integer-scaled so the decoder runs in exact
//! arithmetic.

use alloc::vec::Vec;
use core::fmt;

/// Errors from alphabet construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphabetError {
    /// Levels or thresholds are empty, non-positive, or not strictly
    /// increasing.
    NotStrictlyIncreasing,
    /// Levels and thresholds differ in length.
    LengthMismatch,
    /// The channel magnitude is not positive.
    NonPositiveChannel,
    /// A named constraint system is violated (e.g. `L1 < C < 2*L1` for
    /// the 7-level linear-threshold decoder).
    ConstraintViolated(&'static str),
}

impl fmt::Display for AlphabetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphabetError::NotStrictlyIncreasing => {
                write!(f, "levels and thresholds must be strictly increasing positives")
            }
            AlphabetError::LengthMismatch => {
                write!(f, "levels and thresholds must have the same length")
            }
            AlphabetError::NonPositiveChannel => write!(f, "channel magnitude must be positive"),
            AlphabetError::ConstraintViolated(c) => write!(f, "constraint violated: {c}"),
        }
    }
}

impl core::error::Error for AlphabetError {}

/// Message levels `L1..LM`, thresholds `T1..TM`, and channel magnitude `C`
/// of one multilevel decoder instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelAlphabet {
    levels: Vec<i32>,
    thresholds: Vec<i32>,
    channel_magnitude: i32,
}

impl LevelAlphabet {
    pub fn new(
        levels: Vec<i32>,
        thresholds: Vec<i32>,
        channel_magnitude: i32,
    ) -> Result<Self, AlphabetError> {
        if levels.len() != thresholds.len() {
            return Err(AlphabetError::LengthMismatch);
        }
        if levels.is_empty()
            || levels[0] <= 0
            || thresholds[0] <= 0
            || levels.windows(2).any(|w| w[0] >= w[1])
            || thresholds.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(AlphabetError::NotStrictlyIncreasing);
        }
        if channel_magnitude <= 0 {
            return Err(AlphabetError::NonPositiveChannel);
        }
        Ok(LevelAlphabet { levels, thresholds, channel_magnitude })
    }

    /// 7-level linear-threshold alphabet from the free parameters `L1`
    /// and `C`, which must satisfy `L1 < C < 2*L1`. The remaining values
    /// are forced: `L2 = 2*L1 + C`, `L3 = 2*L2 + C`, `T = (L1, L2, L3)`.
    pub fn lt7(l1: i32, c: i32) -> Result<Self, AlphabetError> {
        if !(l1 < c && c < 2 * l1) {
            return Err(AlphabetError::ConstraintViolated("L1 < C < 2*L1"));
        }
        let l2 = 2 * l1 + c;
        let l3 = 2 * l2 + c;
        LevelAlphabet::new(alloc::vec![l1, l2, l3], alloc::vec![l1, l2, l3], c)
    }

    /// The default integer instantiation of the 7-level alphabet:
    /// `L = (2, 7, 17)`, `T = (2, 7, 17)`, `C = 3`.
    pub fn lt7_default() -> Self {
        Self::lt7(2, 3).expect("2 < 3 < 4")
    }

    /// 5-level non-linear-threshold alphabet, forced up to scaling:
    /// `C = L1`, `L2 = 3*L1`, `T = (L1, L2)`.
    pub fn nlt5(l1: i32) -> Result<Self, AlphabetError> {
        if l1 <= 0 {
            return Err(AlphabetError::NonPositiveChannel);
        }
        LevelAlphabet::new(alloc::vec![l1, 3 * l1], alloc::vec![l1, 3 * l1], l1)
    }

    /// The default integer instantiation of the 5-level alphabet:
    /// `L = (1, 3)`, `T = (1, 3)`, `C = 1`.
    pub fn nlt5_default() -> Self {
        Self::nlt5(1).expect("1 is positive")
    }

    /// Number of positive levels `M`; the alphabet has `2M + 1` values.
    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[i32] {
        &self.levels
    }

    pub fn thresholds(&self) -> &[i32] {
        &self.thresholds
    }

    /// Channel magnitude `C`; received bit `r` maps to `y = (-1)^r * C`.
    pub fn channel_magnitude(&self) -> i32 {
        self.channel_magnitude
    }

    /// Saturation level `LM`.
    pub fn max_level(&self) -> i32 {
        *self.levels.last().expect("alphabet is non-empty")
    }

    /// Threshold quantizer: `L_i` for `T_i <= x < T_{i+1}` (with
    /// `T_{M+1} = infinity`), `-L_i` for `-T_{i+1} < x <= -T_i`, else 0.
    /// Odd and non-decreasing in `x`.
    pub fn quantize(&self, x: i64) -> i32 {
        let mag = x.unsigned_abs();
        let mut level = 0;
        for (i, &t) in self.thresholds.iter().enumerate() {
            if mag >= t as u64 {
                level = self.levels[i];
            } else {
                break;
            }
        }
        if x < 0 {
            -level
        } else {
            level
        }
    }

    /// True when `m` is one of the `2M + 1` alphabet values.
    pub fn contains(&self, m: i32) -> bool {
        m == 0 || self.levels.contains(&m.abs())
    }

    /// Signed level index of an alphabet value: `0 -> 0`, `±L_i -> ±i`.
    /// `None` when `m` is not in the alphabet.
    pub fn classify(&self, m: i32) -> Option<i32> {
        if m == 0 {
            return Some(0);
        }
        let idx = self.levels.iter().position(|&l| l == m.abs())? as i32 + 1;
        Some(if m < 0 { -idx } else { idx })
    }

    /// Largest magnitude a variable-node sum can reach on a code with
    /// variable degree `d_v`: `(d_v - 1) * LM + C`.
    pub fn sum_bound(&self, d_v: usize) -> i64 {
        (d_v as i64 - 1) * self.max_level() as i64 + self.channel_magnitude as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn lt7_default_values() {
        let a = LevelAlphabet::lt7_default();
        assert_eq!(a.levels(), &[2, 7, 17]);
        assert_eq!(a.thresholds(), &[2, 7, 17]);
        assert_eq!(a.channel_magnitude(), 3);
    }

    #[test]
    fn lt7_rejects_channel_outside_open_interval() {
        assert!(LevelAlphabet::lt7(2, 2).is_err());
        assert!(LevelAlphabet::lt7(2, 4).is_err());
        assert!(LevelAlphabet::lt7(4, 5).is_ok());
    }

    #[test]
    fn nlt5_default_values() {
        let a = LevelAlphabet::nlt5_default();
        assert_eq!(a.levels(), &[1, 3]);
        assert_eq!(a.thresholds(), &[1, 3]);
        assert_eq!(a.channel_magnitude(), 1);
    }

    #[test]
    fn quantizer_matches_piecewise_definition() {
        let a = LevelAlphabet::lt7_default();
        assert_eq!(a.quantize(0), 0);
        assert_eq!(a.quantize(1), 0);
        assert_eq!(a.quantize(3), 2);
        assert_eq!(a.quantize(-3), -2);
        assert_eq!(a.quantize(7), 7); // lower threshold inclusive
        assert_eq!(a.quantize(37), 17); // saturation at L3
        assert_eq!(a.quantize(-37), -17);
    }

    #[test]
    fn quantizer_is_odd_and_monotone_over_reachable_range() {
        let a = LevelAlphabet::lt7_default();
        let bound = a.sum_bound(3);
        assert_eq!(bound, 37);
        let mut prev = i32::MIN;
        for x in -bound..=bound {
            let q = a.quantize(x);
            assert_eq!(a.quantize(-x), -q, "odd at {x}");
            assert!(a.contains(q), "closure at {x}");
            assert!(q >= prev, "monotone at {x}");
            prev = q;
        }
    }

    #[test]
    fn classify_maps_values_to_signed_indices() {
        let a = LevelAlphabet::lt7_default();
        assert_eq!(a.classify(0), Some(0));
        assert_eq!(a.classify(7), Some(2));
        assert_eq!(a.classify(-17), Some(-3));
        assert_eq!(a.classify(5), None);
    }

    #[test]
    fn invalid_alphabets_rejected() {
        assert_eq!(
            LevelAlphabet::new(vec![2, 2], vec![1, 2], 1).unwrap_err(),
            AlphabetError::NotStrictlyIncreasing
        );
        assert_eq!(
            LevelAlphabet::new(vec![1, 2], vec![1], 1).unwrap_err(),
            AlphabetError::LengthMismatch
        );
        assert_eq!(
            LevelAlphabet::new(vec![1], vec![1], 0).unwrap_err(),
            AlphabetError::NonPositiveChannel
        );
    }
}
