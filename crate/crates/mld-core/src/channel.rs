//! Binary symmetric channel sampling with counter-based randomness.
//!
//! Every frame's error pattern is derived from `(seed, stream, frame)`
//! alone, so frames can be decoded in any order by any number of workers
//! and still reproduce bit-identical results.

use crate::pattern::ErrorPattern;
use alloc::vec::Vec;

/// SplitMix64: one 64-bit state, one mixing round per output. Used both
/// as a plain sequential generator and, keyed, as the per-frame counter
/// generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `[0, bound)` by rejection; `bound` must be
    /// positive.
    #[inline]
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        // Reject the final partial interval to stay exactly uniform.
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }
}

/// Mix a (seed, stream, counter) triple into an independent generator.
///
/// Distinct triples give statistically independent SplitMix64 streams;
/// identical triples reproduce identical draws by construction.
pub fn keyed_rng(seed: u64, stream: u64, counter: u64) -> SplitMix64 {
    let mut mixer = SplitMix64::new(
        seed ^ stream.wrapping_mul(0xA076_1D64_78BD_642F)
            ^ counter.wrapping_mul(0xE703_7ED1_A0B4_28DB),
    );
    // Two warm-up outputs decorrelate nearby counters.
    let a = mixer.next_u64();
    let b = mixer.next_u64();
    SplitMix64::new(a ^ b.rotate_left(32))
}

/// A seeded BSC: bits flip independently with probability `alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BscChannel {
    alpha: f64,
    seed: u64,
    stream_id: u64,
}

impl BscChannel {
    /// `alpha` must lie in `[0, 0.5)`; zero is allowed and produces no
    /// flips.
    pub fn new(alpha: f64, seed: u64, stream_id: u64) -> Option<Self> {
        if !(0.0..0.5).contains(&alpha) {
            return None;
        }
        Some(BscChannel { alpha, seed, stream_id })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }

    /// Error pattern of frame `frame` for a code of length `n`.
    ///
    /// Deterministic in `(seed, stream_id, frame)`; flips each bit when
    /// a 64-bit draw falls below `floor(alpha * 2^64)`.
    pub fn sample_frame(&self, n: usize, frame: u64) -> ErrorPattern {
        let mut rng = keyed_rng(self.seed, self.stream_id, frame);
        // alpha < 0.5 keeps the product below 2^63, so the cast is exact
        // up to f64 rounding and alpha = 0 maps to threshold 0.
        let threshold = (self.alpha * (u64::MAX as f64 + 1.0)) as u64;
        let support: Vec<usize> =
            (0..n).filter(|_| rng.next_u64() < threshold).collect();
        ErrorPattern::from_sorted(support, n).expect("support is sorted and in range")
    }
}

/// Uniformly random weight-`t` support over `[0, n)`, deterministic in
/// `(seed, stream, sample_index)`.
///
/// Floyd's algorithm: t draws, no rejection on collisions beyond the
/// set insert.
pub fn sample_weight_t(seed: u64, stream: u64, sample: u64, n: usize, t: usize) -> ErrorPattern {
    assert!(t <= n, "weight must not exceed the code length");
    let mut rng = keyed_rng(seed, stream, sample);
    let mut support: Vec<usize> = Vec::with_capacity(t);
    for j in (n - t)..n {
        let r = rng.next_below(j as u64 + 1) as usize;
        if support.contains(&r) {
            support.push(j);
        } else {
            support.push(r);
        }
    }
    support.sort_unstable();
    ErrorPattern::from_sorted(support, n).expect("Floyd sampling yields distinct indices")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_alpha_never_flips() {
        let ch = BscChannel::new(0.0, 1, 2).unwrap();
        for frame in 0..50 {
            assert_eq!(ch.sample_frame(100, frame).weight(), 0);
        }
    }

    #[test]
    fn alpha_range_enforced() {
        assert!(BscChannel::new(0.5, 0, 0).is_none());
        assert!(BscChannel::new(-0.1, 0, 0).is_none());
        assert!(BscChannel::new(0.499, 0, 0).is_some());
    }

    #[test]
    fn identical_keys_reproduce_identical_frames() {
        let a = BscChannel::new(0.1, 42, 7).unwrap();
        let b = BscChannel::new(0.1, 42, 7).unwrap();
        for frame in 0..20 {
            assert_eq!(a.sample_frame(64, frame), b.sample_frame(64, frame));
        }
        // A different stream gives different patterns somewhere.
        let c = BscChannel::new(0.1, 42, 8).unwrap();
        assert!((0..20).any(|f| a.sample_frame(64, f) != c.sample_frame(64, f)));
    }

    #[test]
    fn empirical_flip_rate_within_three_sigma() {
        let n = 100_000usize;
        let alpha = 0.01;
        let ch = BscChannel::new(alpha, 0xFEED, 0).unwrap();
        let flips = ch.sample_frame(n, 0).weight() as f64;
        let mean = n as f64 * alpha;
        let sigma = libm::sqrt(n as f64 * alpha * (1.0 - alpha));
        assert!(
            (flips - mean).abs() <= 3.0 * sigma,
            "flips {flips} outside 3 sigma of {mean}"
        );
    }

    #[test]
    fn weight_t_sampler_yields_exact_weight_and_range() {
        for sample in 0..100 {
            let p = sample_weight_t(9, 1, sample, 155, 4);
            assert_eq!(p.weight(), 4);
            assert!(p.support().windows(2).all(|w| w[0] < w[1]));
            assert!(*p.support().last().unwrap() < 155);
        }
    }

    #[test]
    fn weight_t_sampler_covers_all_supports_for_tiny_case() {
        // n = 4, t = 2: all 6 supports should appear over many draws.
        let mut seen = alloc::collections::BTreeSet::new();
        for sample in 0..500 {
            let p = sample_weight_t(3, 0, sample, 4, 2);
            seen.insert(p.support().to_vec());
        }
        assert_eq!(seen.len(), 6);
    }
}
