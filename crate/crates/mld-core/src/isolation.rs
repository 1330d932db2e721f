//! Decoding on isolated trapping-set subgraphs.
//!
//! An induced subgraph `H` of a trapping set is decoded standalone: its
//! degree-one checks stand in for the (all-correct) rest of the graph
//! and inject the message `mu_l` in iteration `l`, where `mu_0 = 0` and
//! `mu_l = Phi_v(mu_{l-1}, mu_{l-1}, +C)`. All other message passing on
//! `H` is ordinary. Decoding succeeds when every variable of `H`
//! decides its transmitted (zero) value.
//!
//! The critical number of `H` under a decoder is the smallest error
//! weight for which this isolated decode fails.

use crate::code::TannerGraph;
use crate::engine::{DecoderConfig, DecoderKind, EdgeLayout, EngineError, IterationRecord};
use crate::pattern::{enumerate_patterns, ErrorPattern};
use crate::rules::{IsolationRules, LtRules, MinSumRules, NltRules};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from subgraph construction and isolated decoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgraphError {
    /// A check listed as degree-one has a different degree.
    NotDegreeOne { check: usize, degree: usize },
    /// A degree-one check of the graph is missing from the listed set.
    MissingDegreeOne { check: usize },
    /// The pattern's length does not match the subgraph's variable count.
    PatternLengthMismatch { expected: usize, got: usize },
    /// Exhaustive enumeration guard: the subgraph has too many variables.
    TooManyVariables { variables: usize, guard: usize },
    /// Isolated decoding is defined for the LT, NLT and min-sum rules.
    UnsupportedDecoder(DecoderKind),
}

impl fmt::Display for SubgraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgraphError::NotDegreeOne { check, degree } => {
                write!(f, "check {check} has degree {degree}, not 1")
            }
            SubgraphError::MissingDegreeOne { check } => {
                write!(f, "degree-one check {check} missing from the listed set")
            }
            SubgraphError::PatternLengthMismatch { expected, got } => {
                write!(f, "pattern length {got}, subgraph has {expected} variables")
            }
            SubgraphError::TooManyVariables { variables, guard } => {
                write!(f, "{variables} variables exceed the exhaustive guard of {guard}")
            }
            SubgraphError::UnsupportedDecoder(kind) => {
                write!(f, "isolated decoding not defined for {kind}")
            }
        }
    }
}

impl core::error::Error for SubgraphError {}

/// An induced trapping-set subgraph with its degree-one checks marked.
///
/// The `(a, b)` label is derived: `a` is the variable count and `b` the
/// number of odd-degree checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphSpec {
    graph: TannerGraph,
    degree_one_checks: Vec<usize>,
}

impl SubgraphSpec {
    /// `degree_one_checks` must list exactly the degree-one checks of
    /// the graph, in any order.
    pub fn new(graph: TannerGraph, mut degree_one_checks: Vec<usize>) -> Result<Self, SubgraphError> {
        degree_one_checks.sort_unstable();
        degree_one_checks.dedup();
        for &c in &degree_one_checks {
            let degree = graph.chk_neighbors(c).len();
            if degree != 1 {
                return Err(SubgraphError::NotDegreeOne { check: c, degree });
            }
        }
        for c in 0..graph.num_checks() {
            if graph.chk_neighbors(c).len() == 1 && !degree_one_checks.contains(&c) {
                return Err(SubgraphError::MissingDegreeOne { check: c });
            }
        }
        Ok(SubgraphSpec { graph, degree_one_checks })
    }

    pub fn graph(&self) -> &TannerGraph {
        &self.graph
    }

    /// Degree-one checks, sorted.
    pub fn degree_one_checks(&self) -> &[usize] {
        &self.degree_one_checks
    }

    /// `(a, b)`: variable count and odd-degree check count.
    pub fn label(&self) -> (usize, usize) {
        let a = self.graph.num_variables();
        let b = (0..self.graph.num_checks())
            .filter(|&c| self.graph.chk_neighbors(c).len() % 2 == 1)
            .count();
        (a, b)
    }

    /// Variables with at least one degree-one check neighbor.
    pub fn boundary_variables(&self) -> Vec<usize> {
        let mut vars: Vec<usize> = self
            .degree_one_checks
            .iter()
            .map(|&c| self.graph.chk_neighbors(c)[0])
            .collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }
}

/// Record of one isolated decode.
#[derive(Debug, Clone, PartialEq)]
pub struct IsolationTrace<M> {
    /// `mu_0 .. mu_k` for the iterations actually run.
    pub mu: Vec<M>,
    /// Per-iteration messages on `H` (empty unless tracing was on).
    pub iterations: Vec<IterationRecord<M>>,
    /// First iteration at whose end every variable decided zero.
    pub converged_at: Option<usize>,
}

/// The degree-one check injection sequence `mu_0 .. mu_k`.
pub fn mu_sequence<R: IsolationRules>(rules: &R, k: usize) -> Vec<R::Msg> {
    let mut mu = Vec::with_capacity(k + 1);
    mu.push(rules.mu_zero());
    for _ in 0..k {
        let prev = *mu.last().expect("mu is non-empty");
        mu.push(rules.mu_next(prev));
    }
    mu
}

/// Isolated decode of `pattern` on `sub` for up to `max_iterations`
/// iterations. Degree-one checks inject `mu_l` in iteration `l`; all
/// other message passing is ordinary flooding.
pub fn decode_isolated<R: IsolationRules>(
    rules: &R,
    sub: &SubgraphSpec,
    pattern: &ErrorPattern,
    max_iterations: usize,
    record_messages: bool,
) -> Result<IsolationTrace<R::Msg>, SubgraphError>
where
    R::Msg: Default,
{
    let graph = &sub.graph;
    let n = graph.num_variables();
    if pattern.len() != n {
        return Err(SubgraphError::PatternLengthMismatch { expected: n, got: pattern.len() });
    }
    let layout = EdgeLayout::new(graph);
    let edges = layout.num_edges();

    let y: Vec<R::Msg> = {
        let word = pattern.to_word();
        (0..n).map(|v| rules.channel_value(word[v] != 0)).collect()
    };
    let mut var_to_chk = vec![R::Msg::default(); edges];
    let mut chk_to_var = vec![R::Msg::default(); edges];
    let mut hard = vec![0u8; n];
    let mut scratch: Vec<R::Msg> = Vec::new();
    let mut others: Vec<R::Msg> = Vec::new();

    let mut mu = vec![rules.mu_zero()];
    let mut iterations = Vec::new();
    let mut converged_at = None;

    for it in 1..=max_iterations {
        // First half: variable updates.
        for v in 0..n {
            let range = layout.var_edges(v);
            if it == 1 {
                let msg = rules.initial_var_message(y[v]);
                for e in range {
                    var_to_chk[e] = msg;
                }
                continue;
            }
            scratch.clear();
            for e in range.clone() {
                scratch.push(chk_to_var[e]);
            }
            for (slot, e) in range.enumerate() {
                others.clear();
                for (i, &m) in scratch.iter().enumerate() {
                    if i != slot {
                        others.push(m);
                    }
                }
                var_to_chk[e] = rules.var_message(&others, y[v]);
            }
        }

        // Second half: check updates; degree-one checks inject mu_l.
        let mu_l = rules.mu_next(*mu.last().expect("mu is non-empty"));
        mu.push(mu_l);
        for c in 0..graph.num_checks() {
            let chk_edges = layout.chk_edges(c);
            if chk_edges.len() == 1 {
                chk_to_var[chk_edges[0]] = mu_l;
                continue;
            }
            scratch.clear();
            for &e in chk_edges {
                scratch.push(var_to_chk[e]);
            }
            for (slot, &e) in chk_edges.iter().enumerate() {
                others.clear();
                for (i, &m) in scratch.iter().enumerate() {
                    if i != slot {
                        others.push(m);
                    }
                }
                chk_to_var[e] = rules.check_message(&others);
            }
        }

        // Hard decisions; success means every variable decides zero.
        for v in 0..n {
            scratch.clear();
            for e in layout.var_edges(v) {
                scratch.push(chk_to_var[e]);
            }
            hard[v] = u8::from(rules.hard_decision(&scratch, y[v]));
        }
        if record_messages {
            iterations.push(IterationRecord {
                var_to_chk: var_to_chk.clone(),
                chk_to_var: chk_to_var.clone(),
                hard_decision: hard.clone(),
            });
        }
        if hard.iter().all(|&b| b == 0) {
            converged_at = Some(it);
            break;
        }
    }

    Ok(IsolationTrace { mu, iterations, converged_at })
}

/// Result of a critical-number search on one subgraph.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalNumberResult {
    pub decoder: DecoderKind,
    /// `(a, b)` label of the subgraph.
    pub label: (usize, usize),
    /// Minimal failing weight, or `None` when every non-empty pattern
    /// up to weight `a` decodes.
    pub critical_number: Option<usize>,
    /// Lexicographically first failing pattern of that weight.
    pub witness: Option<ErrorPattern>,
    pub patterns_tested: u64,
}

/// Guard for the exhaustive `2^a` enumeration.
pub const CRITICAL_ENUMERATION_GUARD: usize = 24;

/// Exhaustively search patterns on `sub` by increasing weight and return
/// the minimal weight at which the isolated decode fails.
pub fn critical_number<R: IsolationRules>(
    rules: &R,
    kind: DecoderKind,
    sub: &SubgraphSpec,
    max_iterations: usize,
) -> Result<CriticalNumberResult, SubgraphError>
where
    R::Msg: Default,
{
    let a = sub.graph.num_variables();
    if a > CRITICAL_ENUMERATION_GUARD {
        return Err(SubgraphError::TooManyVariables {
            variables: a,
            guard: CRITICAL_ENUMERATION_GUARD,
        });
    }
    let mut tested = 0u64;
    for weight in 1..=a {
        for pattern in enumerate_patterns(a, weight) {
            tested += 1;
            let trace = decode_isolated(rules, sub, &pattern, max_iterations, false)?;
            if trace.converged_at.is_none() {
                return Ok(CriticalNumberResult {
                    decoder: kind,
                    label: sub.label(),
                    critical_number: Some(weight),
                    witness: Some(pattern),
                    patterns_tested: tested,
                });
            }
        }
    }
    Ok(CriticalNumberResult {
        decoder: kind,
        label: sub.label(),
        critical_number: None,
        witness: None,
        patterns_tested: tested,
    })
}

/// Configuration dispatcher for the isolation operations: the isolated
/// model is defined for the LT, NLT and min-sum decoders.
pub fn mu_sequence_for(config: &DecoderConfig, k: usize) -> Result<Vec<f64>, EngineError> {
    match config.kind {
        DecoderKind::Lt7 => {
            let alphabet = config.resolved_alphabet().expect("lt7 resolves an alphabet");
            Ok(mu_sequence(&LtRules { alphabet }, k).iter().map(|&m| m as f64).collect())
        }
        DecoderKind::Nlt5 => {
            let alphabet = config.resolved_alphabet().expect("nlt5 resolves an alphabet");
            Ok(mu_sequence(&NltRules { alphabet }, k).iter().map(|&m| m as f64).collect())
        }
        DecoderKind::MinSum => Ok(mu_sequence(&MinSumRules, k)),
        kind => Err(EngineError::UnsupportedCode(alloc::format!(
            "isolation analysis not defined for {kind}"
        ))),
    }
}

/// Configuration dispatcher for [`decode_isolated`], widening messages
/// to `f64`.
pub fn decode_isolated_for(
    config: &DecoderConfig,
    sub: &SubgraphSpec,
    pattern: &ErrorPattern,
) -> Result<IsolationTrace<f64>, IsolationError> {
    fn widen<R: IsolationRules>(t: IsolationTrace<R::Msg>) -> IsolationTrace<f64> {
        IsolationTrace {
            mu: t.mu.iter().map(|&m| R::msg_to_f64(m)).collect(),
            iterations: t
                .iterations
                .into_iter()
                .map(|r| IterationRecord {
                    var_to_chk: r.var_to_chk.iter().map(|&m| R::msg_to_f64(m)).collect(),
                    chk_to_var: r.chk_to_var.iter().map(|&m| R::msg_to_f64(m)).collect(),
                    hard_decision: r.hard_decision,
                })
                .collect(),
            converged_at: t.converged_at,
        }
    }
    let k = config.max_iterations;
    let record = config.trace;
    match config.kind {
        DecoderKind::Lt7 => {
            let alphabet = config.resolved_alphabet().expect("lt7 resolves an alphabet");
            Ok(widen::<LtRules>(decode_isolated(&LtRules { alphabet }, sub, pattern, k, record)?))
        }
        DecoderKind::Nlt5 => {
            let alphabet = config.resolved_alphabet().expect("nlt5 resolves an alphabet");
            Ok(widen::<NltRules>(decode_isolated(&NltRules { alphabet }, sub, pattern, k, record)?))
        }
        DecoderKind::MinSum => {
            Ok(widen::<MinSumRules>(decode_isolated(&MinSumRules, sub, pattern, k, record)?))
        }
        kind => Err(SubgraphError::UnsupportedDecoder(kind).into()),
    }
}

/// Configuration dispatcher for [`critical_number`].
pub fn critical_number_for(
    config: &DecoderConfig,
    sub: &SubgraphSpec,
) -> Result<CriticalNumberResult, IsolationError> {
    let k = config.max_iterations;
    match config.kind {
        DecoderKind::Lt7 => {
            let alphabet = config.resolved_alphabet().expect("lt7 resolves an alphabet");
            Ok(critical_number(&LtRules { alphabet }, config.kind, sub, k)?)
        }
        DecoderKind::Nlt5 => {
            let alphabet = config.resolved_alphabet().expect("nlt5 resolves an alphabet");
            Ok(critical_number(&NltRules { alphabet }, config.kind, sub, k)?)
        }
        DecoderKind::MinSum => Ok(critical_number(&MinSumRules, config.kind, sub, k)?),
        kind => Err(SubgraphError::UnsupportedDecoder(kind).into()),
    }
}

/// Either a subgraph error or a configuration error.
#[derive(Debug, Clone, PartialEq)]
pub enum IsolationError {
    Subgraph(SubgraphError),
    Engine(EngineError),
}

impl fmt::Display for IsolationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsolationError::Subgraph(e) => e.fmt(f),
            IsolationError::Engine(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for IsolationError {}

impl From<SubgraphError> for IsolationError {
    fn from(e: SubgraphError) -> Self {
        IsolationError::Subgraph(e)
    }
}

impl From<EngineError> for IsolationError {
    fn from(e: EngineError) -> Self {
        IsolationError::Engine(e)
    }
}
