//! Node update maps.
//!
//! The check rule [`phi_c`] is the min-sum rule (sign product times
//! minimum magnitude) for every decoder in this crate. The two multilevel
//! variable rules differ in how they treat the channel value:
//!
//! - linear-threshold (LT): `Q(sum of incoming + y)`;
//! - non-linear-threshold (NLT): `Q(sum of incoming + w*y)` where the
//!   weight `w` is 0 exactly when the two incoming messages are `+L2`
//!   and `-L2`, and 1 otherwise (see [`omega`]).
//!
//! [`DecoderRules`] packages a message type with its update maps so the
//! flooding engine can be instantiated for the multilevel decoders and
//! the reference decoders (min-sum, belief propagation, Gallager-B).

use crate::alphabet::LevelAlphabet;
use core::fmt;

/// Errors from rule application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleError {
    /// The non-linear weight is defined for two incoming messages only
    /// (variable degree 3).
    UnsupportedDegree { expected: usize, got: usize },
}

impl fmt::Display for RuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleError::UnsupportedDegree { expected, got } => {
                write!(f, "rule defined for {expected} incoming messages, got {got}")
            }
        }
    }
}

impl core::error::Error for RuleError {}

fn sign_i64(x: i64) -> i64 {
    // sign(0) is +1 by convention; it never changes a rule output but
    // keeps the maps deterministic.
    if x < 0 {
        -1
    } else {
        1
    }
}

/// Check-node rule: product of signs times minimum magnitude of the
/// `d_c - 1` incoming messages. Any zero input forces a zero output.
///
/// `others` must be non-empty.
pub fn phi_c(others: &[i32]) -> i32 {
    assert!(!others.is_empty(), "check rule needs at least one incoming message");
    let mut sign = 1i64;
    let mut min_mag = i64::MAX;
    for &m in others {
        sign *= sign_i64(m as i64);
        min_mag = min_mag.min((m as i64).abs());
    }
    (sign * min_mag) as i32
}

/// Linear-threshold variable rule: quantized sum of the incoming
/// messages and the channel value.
pub fn phi_v_lt(alphabet: &LevelAlphabet, others: &[i32], y: i32) -> i32 {
    let sum: i64 = others.iter().map(|&m| m as i64).sum::<i64>() + y as i64;
    alphabet.quantize(sum)
}

/// Channel weight of the non-linear-threshold rule:
/// `1 - (sign(m1) xor sign(m2)) * delta(|m1| + |m2| - 2*L2)`,
/// i.e. 0 exactly when the two messages sit at the top level with
/// opposite signs.
pub fn omega(alphabet: &LevelAlphabet, others: &[i32]) -> Result<i32, RuleError> {
    if others.len() != 2 {
        return Err(RuleError::UnsupportedDegree { expected: 2, got: others.len() });
    }
    let (m1, m2) = (others[0] as i64, others[1] as i64);
    let signs_differ = sign_i64(m1) != sign_i64(m2);
    let at_top = m1.abs() + m2.abs() == 2 * alphabet.max_level() as i64;
    Ok(if signs_differ && at_top { 0 } else { 1 })
}

/// Non-linear-threshold variable rule: quantized sum of the incoming
/// messages and the weighted channel value.
pub fn phi_v_nlt(alphabet: &LevelAlphabet, others: &[i32], y: i32) -> Result<i32, RuleError> {
    let w = omega(alphabet, others)?;
    let sum: i64 =
        others.iter().map(|&m| m as i64).sum::<i64>() + (w as i64) * (y as i64);
    Ok(alphabet.quantize(sum))
}

/// Hard decision from all `d_v` incoming messages plus the unweighted
/// channel value: bit 0 if the sum is positive, bit 1 if negative, and
/// the channel hard decision on an exact tie.
pub fn multilevel_hard_decision(incoming: &[i32], y: i32) -> bool {
    let sum: i64 = incoming.iter().map(|&m| m as i64).sum::<i64>() + y as i64;
    match sum {
        s if s > 0 => false,
        s if s < 0 => true,
        _ => y < 0,
    }
}

/// A message type together with its update maps; the flooding engine in
/// [`crate::engine`] is generic over this.
pub trait DecoderRules {
    type Msg: Copy + PartialEq + fmt::Debug + Send + Sync;

    fn name(&self) -> &'static str;

    /// Channel value for a received bit: `y = (-1)^r * C` (or the bit
    /// itself for binary decoders).
    fn channel_value(&self, bit: bool) -> Self::Msg;

    /// Variable-to-check message of iteration 1, where all incoming
    /// messages are zero.
    fn initial_var_message(&self, y: Self::Msg) -> Self::Msg;

    /// Variable-to-check message from the other `d_v - 1` incoming
    /// messages and the channel value.
    fn var_message(&self, others: &[Self::Msg], y: Self::Msg) -> Self::Msg;

    /// Check-to-variable message from the other `d_c - 1` incoming
    /// messages. An empty slice (a degree-one check in a full decode)
    /// pins the bit to zero with the strongest positive message.
    fn check_message(&self, others: &[Self::Msg]) -> Self::Msg;

    /// Hard decision from all `d_v` incoming messages and the channel
    /// value; ties break toward the received bit.
    fn hard_decision(&self, incoming: &[Self::Msg], y: Self::Msg) -> bool;

    /// Numeric view of a message for traces and reports.
    fn msg_to_f64(m: Self::Msg) -> f64;
}

/// Rules that support decoding on isolated subgraphs: the message a
/// degree-one check injects in iteration `l` follows the recursion
/// `mu_l = var_message(mu_{l-1}, mu_{l-1}, +C)` with `mu_0 = 0`.
pub trait IsolationRules: DecoderRules {
    fn mu_zero(&self) -> Self::Msg;

    fn mu_next(&self, prev: Self::Msg) -> Self::Msg {
        self.var_message(&[prev, prev], self.channel_value(false))
    }
}

/// 7-level (or general multilevel) linear-threshold decoder.
#[derive(Debug, Clone)]
pub struct LtRules {
    pub alphabet: LevelAlphabet,
}

impl LtRules {
    pub fn lt7_default() -> Self {
        LtRules { alphabet: LevelAlphabet::lt7_default() }
    }
}

impl DecoderRules for LtRules {
    type Msg = i32;

    fn name(&self) -> &'static str {
        "7lt"
    }

    fn channel_value(&self, bit: bool) -> i32 {
        let c = self.alphabet.channel_magnitude();
        if bit {
            -c
        } else {
            c
        }
    }

    fn initial_var_message(&self, y: i32) -> i32 {
        self.alphabet.quantize(y as i64)
    }

    fn var_message(&self, others: &[i32], y: i32) -> i32 {
        phi_v_lt(&self.alphabet, others, y)
    }

    fn check_message(&self, others: &[i32]) -> i32 {
        if others.is_empty() {
            return self.alphabet.max_level();
        }
        phi_c(others)
    }

    fn hard_decision(&self, incoming: &[i32], y: i32) -> bool {
        multilevel_hard_decision(incoming, y)
    }

    fn msg_to_f64(m: i32) -> f64 {
        m as f64
    }
}

impl IsolationRules for LtRules {
    fn mu_zero(&self) -> i32 {
        0
    }
}

/// 5-level non-linear-threshold decoder; requires variable degree 3.
#[derive(Debug, Clone)]
pub struct NltRules {
    pub alphabet: LevelAlphabet,
}

impl NltRules {
    pub fn nlt5_default() -> Self {
        NltRules { alphabet: LevelAlphabet::nlt5_default() }
    }
}

impl DecoderRules for NltRules {
    type Msg = i32;

    fn name(&self) -> &'static str {
        "5nlt"
    }

    fn channel_value(&self, bit: bool) -> i32 {
        let c = self.alphabet.channel_magnitude();
        if bit {
            -c
        } else {
            c
        }
    }

    fn initial_var_message(&self, y: i32) -> i32 {
        // All-zero incoming means the weight is 1.
        self.alphabet.quantize(y as i64)
    }

    fn var_message(&self, others: &[i32], y: i32) -> i32 {
        phi_v_nlt(&self.alphabet, others, y)
            .expect("engine validates variable degree 3 for the non-linear rule")
    }

    fn check_message(&self, others: &[i32]) -> i32 {
        if others.is_empty() {
            return self.alphabet.max_level();
        }
        phi_c(others)
    }

    fn hard_decision(&self, incoming: &[i32], y: i32) -> bool {
        // Channel term unweighted here; the non-linear weight applies to
        // messages only.
        multilevel_hard_decision(incoming, y)
    }

    fn msg_to_f64(m: i32) -> f64 {
        m as f64
    }
}

impl IsolationRules for NltRules {
    fn mu_zero(&self) -> i32 {
        0
    }
}

/// Magnitude that a degree-one check pins its variable with in the
/// real-valued decoders. Large enough to dominate any reachable sum.
const PINNED: f64 = 1e300;

/// Unquantized min-sum with channel values of magnitude 1.
#[derive(Debug, Clone, Default)]
pub struct MinSumRules;

impl DecoderRules for MinSumRules {
    type Msg = f64;

    fn name(&self) -> &'static str {
        "minsum"
    }

    fn channel_value(&self, bit: bool) -> f64 {
        if bit {
            -1.0
        } else {
            1.0
        }
    }

    fn initial_var_message(&self, y: f64) -> f64 {
        y
    }

    fn var_message(&self, others: &[f64], y: f64) -> f64 {
        (others.iter().sum::<f64>() + y).clamp(-PINNED, PINNED)
    }

    fn check_message(&self, others: &[f64]) -> f64 {
        if others.is_empty() {
            return PINNED;
        }
        let mut sign = 1.0f64;
        let mut min_mag = f64::INFINITY;
        for &m in others {
            if m < 0.0 {
                sign = -sign;
            }
            min_mag = min_mag.min(m.abs());
        }
        sign * min_mag
    }

    fn hard_decision(&self, incoming: &[f64], y: f64) -> bool {
        let sum = incoming.iter().sum::<f64>() + y;
        if sum > 0.0 {
            false
        } else if sum < 0.0 {
            true
        } else {
            y < 0.0
        }
    }

    fn msg_to_f64(m: f64) -> f64 {
        m
    }
}

impl IsolationRules for MinSumRules {
    fn mu_zero(&self) -> f64 {
        0.0
    }
}

/// Floating-point belief propagation in the log-likelihood domain.
///
/// Channel magnitude is `ln((1 - alpha) / alpha)`; the check rule is the
/// tanh product with inputs clamped to magnitude 30 and the product kept
/// away from `±1` before `atanh`.
#[derive(Debug, Clone)]
pub struct BpRules {
    llr0: f64,
}

/// Clamp bound applied to check-node inputs.
const BP_LLR_CLAMP: f64 = 30.0;
const BP_PRODUCT_EPS: f64 = 1e-15;

impl BpRules {
    /// `alpha` is the assumed BSC crossover probability, in (0, 0.5).
    pub fn new(alpha: f64) -> Option<Self> {
        if !(alpha > 0.0 && alpha < 0.5) {
            return None;
        }
        Some(BpRules { llr0: libm::log((1.0 - alpha) / alpha) })
    }

    pub fn channel_llr(&self) -> f64 {
        self.llr0
    }
}

fn atanh(x: f64) -> f64 {
    0.5 * libm::log((1.0 + x) / (1.0 - x))
}

impl DecoderRules for BpRules {
    type Msg = f64;

    fn name(&self) -> &'static str {
        "bp"
    }

    fn channel_value(&self, bit: bool) -> f64 {
        if bit {
            -self.llr0
        } else {
            self.llr0
        }
    }

    fn initial_var_message(&self, y: f64) -> f64 {
        y
    }

    fn var_message(&self, others: &[f64], y: f64) -> f64 {
        others.iter().sum::<f64>() + y
    }

    fn check_message(&self, others: &[f64]) -> f64 {
        if others.is_empty() {
            return 2.0 * atanh(1.0 - BP_PRODUCT_EPS);
        }
        let mut product = 1.0f64;
        for &m in others {
            product *= libm::tanh(0.5 * m.clamp(-BP_LLR_CLAMP, BP_LLR_CLAMP));
        }
        2.0 * atanh(product.clamp(-1.0 + BP_PRODUCT_EPS, 1.0 - BP_PRODUCT_EPS))
    }

    fn hard_decision(&self, incoming: &[f64], y: f64) -> bool {
        let sum = incoming.iter().sum::<f64>() + y;
        if sum > 0.0 {
            false
        } else if sum < 0.0 {
            true
        } else {
            y < 0.0
        }
    }

    fn msg_to_f64(m: f64) -> f64 {
        m
    }
}

/// Binary-message Gallager-B: a variable forwards the complement of its
/// received bit when a strict majority of the other incoming messages
/// disagree with it. For variable degree 3 this coincides with
/// Gallager-A.
#[derive(Debug, Clone, Default)]
pub struct GallagerBRules;

impl DecoderRules for GallagerBRules {
    type Msg = bool;

    fn name(&self) -> &'static str {
        "gallager-b"
    }

    fn channel_value(&self, bit: bool) -> bool {
        bit
    }

    fn initial_var_message(&self, y: bool) -> bool {
        y
    }

    fn var_message(&self, others: &[bool], y: bool) -> bool {
        let disagree = others.iter().filter(|&&b| b != y).count();
        if disagree >= others.len() / 2 + 1 {
            !y
        } else {
            y
        }
    }

    fn check_message(&self, others: &[bool]) -> bool {
        others.iter().fold(false, |acc, &b| acc ^ b)
    }

    fn hard_decision(&self, incoming: &[bool], y: bool) -> bool {
        let ones = incoming.iter().filter(|&&b| b).count() + usize::from(y);
        let voters = incoming.len() + 1;
        match (2 * ones).cmp(&voters) {
            core::cmp::Ordering::Greater => true,
            core::cmp::Ordering::Less => false,
            core::cmp::Ordering::Equal => y,
        }
    }

    fn msg_to_f64(m: bool) -> f64 {
        if m {
            1.0
        } else {
            0.0
        }
    }
}
