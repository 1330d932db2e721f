//! Multilevel message-passing decoders for LDPC codes on the binary
//! symmetric channel.
//!
//! Messages take values from a small finite alphabet `{0, ±L1, ..., ±LM}`
//! rather than quantized beliefs, and the variable-node update rules are
//! threshold maps over that alphabet. The crate provides:
//!
//! - [`code`]: Tanner graphs, quasi-cyclic construction from circulant
//!   shift matrices, and syndrome computation.
//! - [`alphabet`] and [`rules`]: the message alphabet, the threshold
//!   quantizer, and the variable/check node update maps for the 7-level
//!   linear-threshold and 5-level non-linear-threshold decoders, plus
//!   reference rules (min-sum, belief propagation, Gallager-B).
//! - [`engine`]: a flooding-schedule decode engine generic over the
//!   update rules.
//! - [`isolation`] and [`comptree`]: decoding on isolated trapping-set
//!   subgraphs with degree-one check injection, critical-number search,
//!   and the computation-tree isolation checker.
//! - [`channel`], [`pattern`], [`stats`]: counter-based BSC sampling,
//!   error-pattern enumeration, and frame-error-rate accumulators.
//!
//! The crate is `no_std` (requires `alloc`); all IO, file formats and the
//! command-line surface live in the companion `mld-sim` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod alphabet;
pub mod channel;
pub mod code;
pub mod comptree;
pub mod engine;
pub mod fixtures;
pub mod isolation;
pub mod pattern;
pub mod rules;
pub mod stats;

pub use alphabet::LevelAlphabet;
pub use code::{CodeSpec, QcShiftMatrix, TannerGraph};
pub use engine::{DecodeOutcome, DecoderConfig, DecoderKind};
pub use isolation::{IsolationTrace, SubgraphSpec};
pub use pattern::ErrorPattern;
