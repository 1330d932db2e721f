//! Frame-error-rate accounting.
//!
//! [`FerAccumulator`] is an associative, commutative monoid so partial
//! tallies from any worker partition merge to the same totals.

use alloc::collections::BTreeMap;

/// 95% Wilson score interval for a binomial proportion.
///
/// `frames` must be at least 1 and `errors` at most `frames`.
pub fn wilson_interval(errors: u64, frames: u64) -> (f64, f64) {
    assert!(frames >= 1, "wilson interval needs at least one trial");
    assert!(errors <= frames);
    const Z: f64 = 1.96;
    let n = frames as f64;
    let p = errors as f64 / n;
    let z2 = Z * Z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = Z * libm::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Running tally of a Monte Carlo FER run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FerAccumulator {
    pub frames: u64,
    pub frame_errors: u64,
    /// Frames that converged to a codeword other than the transmitted
    /// one (also counted in `frame_errors`).
    pub undetected_errors: u64,
    pub converged_frames: u64,
    pub iterations_of_converged: u64,
    /// Error-pattern weight histogram of the frame errors.
    pub error_weights: BTreeMap<usize, u64>,
}

impl FerAccumulator {
    pub fn record(&mut self, frame_error: bool, undetected: bool, converged: bool, iterations: usize, weight: usize) {
        self.frames += 1;
        if converged {
            self.converged_frames += 1;
            self.iterations_of_converged += iterations as u64;
        }
        if frame_error {
            self.frame_errors += 1;
            *self.error_weights.entry(weight).or_insert(0) += 1;
        }
        if undetected {
            self.undetected_errors += 1;
        }
    }

    /// Merge another tally; associative and commutative.
    pub fn merge(&mut self, other: &FerAccumulator) {
        self.frames += other.frames;
        self.frame_errors += other.frame_errors;
        self.undetected_errors += other.undetected_errors;
        self.converged_frames += other.converged_frames;
        self.iterations_of_converged += other.iterations_of_converged;
        for (&w, &count) in &other.error_weights {
            *self.error_weights.entry(w).or_insert(0) += count;
        }
    }

    pub fn fer(&self) -> f64 {
        if self.frames == 0 {
            return 0.0;
        }
        self.frame_errors as f64 / self.frames as f64
    }

    /// Mean iteration count among converged frames; 0 when none
    /// converged.
    pub fn avg_iterations(&self) -> f64 {
        if self.converged_frames == 0 {
            return 0.0;
        }
        self.iterations_of_converged as f64 / self.converged_frames as f64
    }

    pub fn confidence_interval(&self) -> (f64, f64) {
        if self.frames == 0 {
            return (0.0, 1.0);
        }
        wilson_interval(self.frame_errors, self.frames)
    }

    /// Smallest error-pattern weight among recorded frame errors.
    pub fn min_error_weight(&self) -> Option<usize> {
        self.error_weights.keys().next().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wilson_zero_errors_out_of_100() {
        let (low, high) = wilson_interval(0, 100);
        assert_eq!(low, 0.0);
        assert!((high - 0.0370).abs() < 2e-4, "high = {high}");
    }

    #[test]
    fn wilson_half_is_symmetric_and_contains_half() {
        let (low, high) = wilson_interval(50, 100);
        assert!(low < 0.5 && 0.5 < high);
        assert!((0.5 - low - (high - 0.5)).abs() < 1e-12);
    }

    #[test]
    fn wilson_all_errors_hits_one() {
        let (_, high) = wilson_interval(100, 100);
        assert!((high - 1.0).abs() < 1e-12);
    }

    #[test]
    fn interval_contains_point_estimate() {
        for (e, n) in [(0u64, 7u64), (3, 10), (99, 100), (1, 1)] {
            let (low, high) = wilson_interval(e, n);
            let p = e as f64 / n as f64;
            assert!(low <= p && p <= high, "({e}, {n})");
        }
    }

    #[test]
    fn accumulator_merge_is_order_independent() {
        let mut a = FerAccumulator::default();
        let mut b = FerAccumulator::default();
        a.record(true, false, false, 100, 4);
        a.record(false, false, true, 3, 0);
        b.record(true, true, true, 9, 6);

        let mut ab = a.clone();
        ab.merge(&b);
        let mut ba = b.clone();
        ba.merge(&a);
        assert_eq!(ab, ba);
        assert_eq!(ab.frames, 3);
        assert_eq!(ab.frame_errors, 2);
        assert_eq!(ab.undetected_errors, 1);
        assert_eq!(ab.min_error_weight(), Some(4));
        assert_eq!(ab.avg_iterations(), 6.0);
    }
}
