//! Flooding-schedule decode engine.
//!
//! One iteration is: every variable node sends one message per edge
//! computed from the other incoming messages and its channel value
//! (iteration 1 uses all-zero incoming), every check node answers, hard
//! decisions are taken from all incoming messages plus the channel
//! value, and the syndrome is checked. Decoding stops on a zero
//! syndrome or after `max_iterations`. The engine is a pure function of
//! (rules, graph, received word).

use crate::alphabet::LevelAlphabet;
use crate::code::{CodeSpec, TannerGraph};
use crate::rules::{
    BpRules, DecoderRules, GallagerBRules, LtRules, MinSumRules, NltRules,
};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Edge bookkeeping shared by decodes on the same graph: edges are
/// numbered variable-major, and each check knows its edge ids.
#[derive(Debug, Clone)]
pub struct EdgeLayout {
    var_start: Vec<usize>,
    edge_var: Vec<usize>,
    edge_chk: Vec<usize>,
    chk_edges: Vec<Vec<usize>>,
}

impl EdgeLayout {
    pub fn new(graph: &TannerGraph) -> Self {
        let n = graph.num_variables();
        let m = graph.num_checks();
        let mut var_start = Vec::with_capacity(n + 1);
        let mut edge_var = Vec::new();
        let mut edge_chk = Vec::new();
        var_start.push(0);
        for v in 0..n {
            for &c in graph.var_neighbors(v) {
                edge_var.push(v);
                edge_chk.push(c);
            }
            var_start.push(edge_var.len());
        }
        let mut chk_edges = vec![Vec::new(); m];
        for c in 0..m {
            for &v in graph.chk_neighbors(c) {
                let e = (var_start[v]..var_start[v + 1])
                    .find(|&e| edge_chk[e] == c)
                    .expect("adjacency is mutually consistent");
                chk_edges[c].push(e);
            }
        }
        EdgeLayout { var_start, edge_var, edge_chk, chk_edges }
    }

    pub fn num_edges(&self) -> usize {
        self.edge_var.len()
    }

    /// Edge ids of variable `v`, in adjacency order.
    pub fn var_edges(&self, v: usize) -> core::ops::Range<usize> {
        self.var_start[v]..self.var_start[v + 1]
    }

    /// Edge ids of check `c`, in adjacency order.
    pub fn chk_edges(&self, c: usize) -> &[usize] {
        &self.chk_edges[c]
    }

    /// The (variable, check) pair of an edge id.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        (self.edge_var[e], self.edge_chk[e])
    }

    /// Edge id joining `v` and `c`, if present.
    pub fn edge_between(&self, v: usize, c: usize) -> Option<usize> {
        self.var_edges(v).find(|&e| self.edge_chk[e] == c)
    }
}

/// Messages of one iteration, edge-indexed per [`EdgeLayout`], plus the
/// hard decisions taken at the end of the iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct IterationRecord<M> {
    pub var_to_chk: Vec<M>,
    pub chk_to_var: Vec<M>,
    pub hard_decision: Vec<u8>,
}

/// Result of one decode.
#[derive(Debug, Clone, PartialEq)]
pub struct DecodeOutcome<M> {
    /// True when a zero syndrome was reached.
    pub converged: bool,
    /// Iterations actually run (equals `max_iterations` on failure).
    pub iterations_used: usize,
    pub hard_decision: Vec<u8>,
    /// Per-iteration messages, when tracing was requested.
    pub trace: Option<Vec<IterationRecord<M>>>,
}

impl<M> DecodeOutcome<M> {
    /// Convergence to a nonzero word: a zero syndrome that is not the
    /// transmitted all-zero codeword.
    pub fn is_undetected_error(&self) -> bool {
        self.converged && self.hard_decision.iter().any(|&b| b != 0)
    }

    /// Frame success under all-zero transmission.
    pub fn is_zero_codeword_success(&self) -> bool {
        self.converged && !self.is_undetected_error()
    }
}

/// A reusable decoder: message buffers are kept across calls so a worker
/// can decode many frames over a shared immutable graph.
pub struct Decoder<'g, R: DecoderRules>
where
    R::Msg: Default,
{
    rules: R,
    graph: &'g TannerGraph,
    layout: EdgeLayout,
    max_iterations: usize,
    y: Vec<R::Msg>,
    var_to_chk: Vec<R::Msg>,
    chk_to_var: Vec<R::Msg>,
    hard: Vec<u8>,
    scratch: Vec<R::Msg>,
    others: Vec<R::Msg>,
}

impl<'g, R: DecoderRules> Decoder<'g, R>
where
    R::Msg: Default,
{
    pub fn new(rules: R, graph: &'g TannerGraph, max_iterations: usize) -> Self {
        let layout = EdgeLayout::new(graph);
        let edges = layout.num_edges();
        Decoder {
            rules,
            graph,
            layout,
            max_iterations,
            y: vec![R::Msg::default(); graph.num_variables()],
            var_to_chk: vec![R::Msg::default(); edges],
            chk_to_var: vec![R::Msg::default(); edges],
            hard: vec![0; graph.num_variables()],
            scratch: Vec::new(),
            others: Vec::new(),
        }
    }

    pub fn rules(&self) -> &R {
        &self.rules
    }

    pub fn layout(&self) -> &EdgeLayout {
        &self.layout
    }

    pub fn max_iterations(&self) -> usize {
        self.max_iterations
    }

    fn var_update(&mut self, first: bool) {
        let n = self.graph.num_variables();
        for v in 0..n {
            let range = self.layout.var_edges(v);
            if first {
                let msg = self.rules.initial_var_message(self.y[v]);
                for e in range {
                    self.var_to_chk[e] = msg;
                }
                continue;
            }
            self.scratch.clear();
            for e in range.clone() {
                self.scratch.push(self.chk_to_var[e]);
            }
            for (slot, e) in range.enumerate() {
                self.others.clear();
                for (i, &m) in self.scratch.iter().enumerate() {
                    if i != slot {
                        self.others.push(m);
                    }
                }
                self.var_to_chk[e] = self.rules.var_message(&self.others, self.y[v]);
            }
        }
    }

    fn chk_update(&mut self) {
        let m = self.graph.num_checks();
        for c in 0..m {
            let degree = self.layout.chk_edges[c].len();
            self.scratch.clear();
            for i in 0..degree {
                let e = self.layout.chk_edges[c][i];
                self.scratch.push(self.var_to_chk[e]);
            }
            for slot in 0..degree {
                self.others.clear();
                for (i, &m) in self.scratch.iter().enumerate() {
                    if i != slot {
                        self.others.push(m);
                    }
                }
                let e = self.layout.chk_edges[c][slot];
                self.chk_to_var[e] = self.rules.check_message(&self.others);
            }
        }
    }

    fn hard_decisions(&mut self) {
        let n = self.graph.num_variables();
        for v in 0..n {
            self.scratch.clear();
            self.scratch
                .extend(self.layout.var_edges(v).map(|e| self.chk_to_var[e]));
            self.hard[v] = u8::from(self.rules.hard_decision(&self.scratch, self.y[v]));
        }
    }

    fn syndrome_is_zero(&self) -> bool {
        (0..self.graph.num_checks()).all(|c| {
            self.graph
                .chk_neighbors(c)
                .iter()
                .fold(0u8, |s, &v| s ^ self.hard[v])
                == 0
        })
    }

    fn run(&mut self, received: &[u8], mut on_iteration: impl FnMut(&Self)) -> (bool, usize) {
        assert_eq!(
            received.len(),
            self.graph.num_variables(),
            "received word length must match the code length"
        );
        for (v, &bit) in received.iter().enumerate() {
            self.y[v] = self.rules.channel_value(bit != 0);
        }
        for it in 1..=self.max_iterations {
            self.var_update(it == 1);
            self.chk_update();
            self.hard_decisions();
            on_iteration(self);
            if self.syndrome_is_zero() {
                return (true, it);
            }
        }
        (false, self.max_iterations)
    }

    /// Decode and report only what frame accounting needs; no clones.
    pub fn decode_frame(&mut self, received: &[u8]) -> FrameResult {
        let (converged, iterations) = self.run(received, |_| {});
        let undetected = converged && self.hard.iter().any(|&b| b != 0);
        FrameResult { converged, iterations, undetected }
    }

    /// Decode with the full outcome, optionally recording every message.
    pub fn decode(&mut self, received: &[u8], record_trace: bool) -> DecodeOutcome<R::Msg> {
        let mut trace = record_trace.then(Vec::new);
        let (converged, iterations_used) = self.run(received, |dec| {
            if let Some(t) = trace.as_mut() {
                t.push(IterationRecord {
                    var_to_chk: dec.var_to_chk.clone(),
                    chk_to_var: dec.chk_to_var.clone(),
                    hard_decision: dec.hard.clone(),
                });
            }
        });
        DecodeOutcome {
            converged,
            iterations_used,
            hard_decision: self.hard.clone(),
            trace,
        }
    }
}

/// Frame-level result for Monte Carlo accounting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameResult {
    pub converged: bool,
    pub iterations: usize,
    /// Converged to a codeword other than the transmitted all-zero one.
    pub undetected: bool,
}

impl FrameResult {
    pub fn is_frame_error(&self) -> bool {
        !self.converged || self.undetected
    }
}

/// Decoder families exposed by the laboratory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecoderKind {
    Lt7,
    Nlt5,
    MinSum,
    Bp,
    GallagerB,
}

impl DecoderKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            DecoderKind::Lt7 => "7lt",
            DecoderKind::Nlt5 => "5nlt",
            DecoderKind::MinSum => "minsum",
            DecoderKind::Bp => "bp",
            DecoderKind::GallagerB => "gallager-b",
        }
    }
}

impl fmt::Display for DecoderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Everything needed to instantiate a decoder for a code.
#[derive(Debug, Clone)]
pub struct DecoderConfig {
    pub kind: DecoderKind,
    /// Alphabet override for the multilevel decoders; defaults to the
    /// integer instantiations.
    pub alphabet: Option<LevelAlphabet>,
    pub max_iterations: usize,
    /// Assumed crossover probability for belief propagation.
    pub bp_crossover: Option<f64>,
    /// Record all messages of every iteration.
    pub trace: bool,
}

impl DecoderConfig {
    pub fn new(kind: DecoderKind) -> Self {
        DecoderConfig {
            kind,
            alphabet: None,
            max_iterations: 100,
            bp_crossover: None,
            trace: false,
        }
    }

    pub fn with_max_iterations(mut self, max_iterations: usize) -> Self {
        self.max_iterations = max_iterations;
        self
    }

    pub fn with_alphabet(mut self, alphabet: LevelAlphabet) -> Self {
        self.alphabet = Some(alphabet);
        self
    }

    pub fn with_bp_crossover(mut self, alpha: f64) -> Self {
        self.bp_crossover = Some(alpha);
        self
    }

    pub fn with_trace(mut self) -> Self {
        self.trace = true;
        self
    }

    /// The alphabet this configuration resolves to (multilevel kinds
    /// only).
    pub fn resolved_alphabet(&self) -> Option<LevelAlphabet> {
        match self.kind {
            DecoderKind::Lt7 => {
                Some(self.alphabet.clone().unwrap_or_else(LevelAlphabet::lt7_default))
            }
            DecoderKind::Nlt5 => {
                Some(self.alphabet.clone().unwrap_or_else(LevelAlphabet::nlt5_default))
            }
            _ => None,
        }
    }
}

/// Errors from configuring a decoder for a code.
#[derive(Debug, Clone, PartialEq)]
pub enum EngineError {
    /// The decoder/code combination is not supported.
    UnsupportedCode(String),
    /// A required parameter is missing or out of range.
    BadParameter(&'static str),
    /// The supplied alphabet violates the decoder's constraint system.
    BadAlphabet(crate::alphabet::AlphabetError),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::UnsupportedCode(s) => write!(f, "unsupported decoder/code combination: {s}"),
            EngineError::BadParameter(p) => write!(f, "bad or missing parameter: {p}"),
            EngineError::BadAlphabet(e) => write!(f, "bad alphabet: {e}"),
        }
    }
}

impl core::error::Error for EngineError {}

fn lt7_constraints(a: &LevelAlphabet) -> Result<(), EngineError> {
    let l = a.levels();
    let c = a.channel_magnitude();
    let ok = l.len() == 3
        && a.thresholds() == l
        && l[0] < c
        && c < 2 * l[0]
        && l[1] == 2 * l[0] + c
        && l[2] == 2 * l[1] + c;
    if ok {
        Ok(())
    } else {
        Err(EngineError::BadAlphabet(crate::alphabet::AlphabetError::ConstraintViolated(
            "L1 < C < 2*L1, L2 = 2*L1 + C, L3 = 2*L2 + C, T = L",
        )))
    }
}

fn nlt5_constraints(a: &LevelAlphabet) -> Result<(), EngineError> {
    let l = a.levels();
    let c = a.channel_magnitude();
    let ok = l.len() == 2 && a.thresholds() == l && c == l[0] && l[1] == 3 * l[0];
    if ok {
        Ok(())
    } else {
        Err(EngineError::BadAlphabet(crate::alphabet::AlphabetError::ConstraintViolated(
            "C = L1, L2 = 3*L1, T = (L1, L2)",
        )))
    }
}

fn require_left_regular_3(code: &CodeSpec, kind: DecoderKind) -> Result<(), EngineError> {
    if code.left_regular_degree != Some(3) {
        return Err(EngineError::UnsupportedCode(alloc::format!(
            "{kind} requires a 3-left-regular code; {} is not",
            code.name
        )));
    }
    Ok(())
}

/// A configured decoder of any kind over one code.
pub enum AnyDecoder<'g> {
    Lt(Decoder<'g, LtRules>),
    Nlt(Decoder<'g, NltRules>),
    MinSum(Decoder<'g, MinSumRules>),
    Bp(Decoder<'g, BpRules>),
    GallagerB(Decoder<'g, GallagerBRules>),
}

impl<'g> AnyDecoder<'g> {
    /// Validate the configuration against the code and build a decoder.
    pub fn build(config: &DecoderConfig, code: &'g CodeSpec) -> Result<Self, EngineError> {
        if config.max_iterations == 0 {
            return Err(EngineError::BadParameter("max_iterations must be positive"));
        }
        let it = config.max_iterations;
        match config.kind {
            DecoderKind::Lt7 => {
                require_left_regular_3(code, config.kind)?;
                let alphabet =
                    config.alphabet.clone().unwrap_or_else(LevelAlphabet::lt7_default);
                lt7_constraints(&alphabet)?;
                Ok(AnyDecoder::Lt(Decoder::new(LtRules { alphabet }, &code.graph, it)))
            }
            DecoderKind::Nlt5 => {
                require_left_regular_3(code, config.kind)?;
                let alphabet =
                    config.alphabet.clone().unwrap_or_else(LevelAlphabet::nlt5_default);
                nlt5_constraints(&alphabet)?;
                Ok(AnyDecoder::Nlt(Decoder::new(NltRules { alphabet }, &code.graph, it)))
            }
            DecoderKind::MinSum => {
                Ok(AnyDecoder::MinSum(Decoder::new(MinSumRules, &code.graph, it)))
            }
            DecoderKind::Bp => {
                let alpha = config
                    .bp_crossover
                    .ok_or(EngineError::BadParameter("bp requires a crossover probability"))?;
                let rules = BpRules::new(alpha)
                    .ok_or(EngineError::BadParameter("bp crossover must be in (0, 0.5)"))?;
                Ok(AnyDecoder::Bp(Decoder::new(rules, &code.graph, it)))
            }
            DecoderKind::GallagerB => {
                Ok(AnyDecoder::GallagerB(Decoder::new(GallagerBRules, &code.graph, it)))
            }
        }
    }

    /// Frame-level decode without trace or clones.
    pub fn decode_frame(&mut self, received: &[u8]) -> FrameResult {
        match self {
            AnyDecoder::Lt(d) => d.decode_frame(received),
            AnyDecoder::Nlt(d) => d.decode_frame(received),
            AnyDecoder::MinSum(d) => d.decode_frame(received),
            AnyDecoder::Bp(d) => d.decode_frame(received),
            AnyDecoder::GallagerB(d) => d.decode_frame(received),
        }
    }

    /// Full decode with messages widened to `f64` for uniform reporting.
    pub fn decode(&mut self, received: &[u8], record_trace: bool) -> DecodeOutcome<f64> {
        fn widen<R: DecoderRules>(o: DecodeOutcome<R::Msg>) -> DecodeOutcome<f64> {
            DecodeOutcome {
                converged: o.converged,
                iterations_used: o.iterations_used,
                hard_decision: o.hard_decision,
                trace: o.trace.map(|records| {
                    records
                        .into_iter()
                        .map(|r| IterationRecord {
                            var_to_chk: r.var_to_chk.iter().map(|&m| R::msg_to_f64(m)).collect(),
                            chk_to_var: r.chk_to_var.iter().map(|&m| R::msg_to_f64(m)).collect(),
                            hard_decision: r.hard_decision,
                        })
                        .collect()
                }),
            }
        }
        match self {
            AnyDecoder::Lt(d) => widen::<LtRules>(d.decode(received, record_trace)),
            AnyDecoder::Nlt(d) => widen::<NltRules>(d.decode(received, record_trace)),
            AnyDecoder::MinSum(d) => widen::<MinSumRules>(d.decode(received, record_trace)),
            AnyDecoder::Bp(d) => widen::<BpRules>(d.decode(received, record_trace)),
            AnyDecoder::GallagerB(d) => widen::<GallagerBRules>(d.decode(received, record_trace)),
        }
    }

    pub fn layout(&self) -> &EdgeLayout {
        match self {
            AnyDecoder::Lt(d) => d.layout(),
            AnyDecoder::Nlt(d) => d.layout(),
            AnyDecoder::MinSum(d) => d.layout(),
            AnyDecoder::Bp(d) => d.layout(),
            AnyDecoder::GallagerB(d) => d.layout(),
        }
    }
}

/// Validate a configuration against a code and run one decode.
pub fn decode(
    config: &DecoderConfig,
    code: &CodeSpec,
    received: &[u8],
) -> Result<DecodeOutcome<f64>, EngineError> {
    if received.len() != code.num_variables() {
        return Err(EngineError::UnsupportedCode(alloc::format!(
            "received word length {} does not match code length {}",
            received.len(),
            code.num_variables()
        )));
    }
    let mut dec = AnyDecoder::build(config, code)?;
    Ok(dec.decode(received, config.trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{tanner_155, QcShiftMatrix};
    use alloc::vec;

    fn all_kinds() -> [DecoderConfig; 5] {
        [
            DecoderConfig::new(DecoderKind::Lt7),
            DecoderConfig::new(DecoderKind::Nlt5),
            DecoderConfig::new(DecoderKind::MinSum),
            DecoderConfig::new(DecoderKind::Bp).with_bp_crossover(0.01),
            DecoderConfig::new(DecoderKind::GallagerB),
        ]
    }

    #[test]
    fn all_zero_word_converges_immediately_for_every_kind() {
        let code = tanner_155();
        let zeros = vec![0u8; 155];
        for config in all_kinds() {
            let out = decode(&config, &code, &zeros).unwrap();
            assert!(out.converged, "{} did not converge", config.kind);
            assert_eq!(out.iterations_used, 1);
            assert!(out.hard_decision.iter().all(|&b| b == 0));
        }
    }

    #[test]
    fn single_error_corrected_by_every_kind() {
        let code = tanner_155();
        let mut word = vec![0u8; 155];
        word[42] = 1;
        for config in all_kinds() {
            let out = decode(&config, &code, &word).unwrap();
            assert!(out.converged, "{} failed on weight-1", config.kind);
            assert!(out.hard_decision.iter().all(|&b| b == 0));
        }
    }

    #[test]
    fn decode_is_deterministic() {
        let code = tanner_155();
        let mut word = vec![0u8; 155];
        for v in [3, 17, 90] {
            word[v] = 1;
        }
        for config in all_kinds() {
            let a = decode(&config.clone().with_trace(), &code, &word).unwrap();
            let b = decode(&config.clone().with_trace(), &code, &word).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn multilevel_decoders_reject_irregular_codes() {
        // Variable degrees 1 on the two-bit single-check code.
        let graph = TannerGraph::from_edges(2, 1, [(0, 0), (1, 0)]).unwrap();
        let code = CodeSpec::new(graph, "pair");
        for kind in [DecoderKind::Lt7, DecoderKind::Nlt5] {
            let err = decode(&DecoderConfig::new(kind), &code, &[0, 0]).unwrap_err();
            assert!(matches!(err, EngineError::UnsupportedCode(_)));
        }
        // Reference decoders accept it.
        let out = decode(&DecoderConfig::new(DecoderKind::GallagerB), &code, &[0, 0]).unwrap();
        assert!(out.converged);
    }

    #[test]
    fn bp_requires_crossover_in_open_interval() {
        let code = tanner_155();
        let err = decode(&DecoderConfig::new(DecoderKind::Bp), &code, &vec![0; 155]).unwrap_err();
        assert_eq!(err, EngineError::BadParameter("bp requires a crossover probability"));
        let err = decode(
            &DecoderConfig::new(DecoderKind::Bp).with_bp_crossover(0.5),
            &code,
            &vec![0; 155],
        )
        .unwrap_err();
        assert_eq!(err, EngineError::BadParameter("bp crossover must be in (0, 0.5)"));
    }

    #[test]
    fn custom_alphabets_must_satisfy_constraint_systems() {
        let code = tanner_155();
        let bad = LevelAlphabet::new(vec![2, 7, 18], vec![2, 7, 18], 3).unwrap();
        let err = decode(
            &DecoderConfig::new(DecoderKind::Lt7).with_alphabet(bad),
            &code,
            &vec![0; 155],
        )
        .unwrap_err();
        assert!(matches!(err, EngineError::BadAlphabet(_)));

        let ok = LevelAlphabet::lt7(4, 5).unwrap();
        assert!(decode(
            &DecoderConfig::new(DecoderKind::Lt7).with_alphabet(ok),
            &code,
            &vec![0; 155],
        )
        .is_ok());
    }

    #[test]
    fn edge_order_shuffle_does_not_change_exact_decoders() {
        let code = tanner_155();
        let shuffled = CodeSpec::new(code.graph.shuffled(0xabcdef), "tanner-155-shuffled");
        let mut word = vec![0u8; 155];
        for v in [10, 77, 140] {
            word[v] = 1;
        }
        for config in [
            DecoderConfig::new(DecoderKind::Lt7),
            DecoderConfig::new(DecoderKind::Nlt5),
            DecoderConfig::new(DecoderKind::MinSum),
            DecoderConfig::new(DecoderKind::GallagerB),
        ] {
            let a = decode(&config, &code, &word).unwrap();
            let b = decode(&config, &shuffled, &word).unwrap();
            assert_eq!(a.converged, b.converged, "{}", config.kind);
            assert_eq!(a.iterations_used, b.iterations_used, "{}", config.kind);
            assert_eq!(a.hard_decision, b.hard_decision, "{}", config.kind);
        }
    }

    #[test]
    fn complement_decodes_symmetrically_on_even_degree_checks() {
        // 3x4 all-nonzero circulants of size 5: every check has degree 4.
        let shifts = QcShiftMatrix::new(
            3,
            4,
            5,
            vec![
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(0),
                Some(1),
                Some(2),
                Some(3),
                Some(0),
                Some(2),
                Some(4),
                Some(1),
            ],
        )
        .unwrap();
        let code = shifts.build_qc_code("even-checks").unwrap();
        assert_eq!(code.left_regular_degree, Some(3));
        let config = DecoderConfig::new(DecoderKind::Lt7).with_trace();
        let mut rng = crate::channel::SplitMix64::new(7);
        for _ in 0..5 {
            let word: Vec<u8> = (0..20).map(|_| (rng.next_u64() & 1) as u8).collect();
            let complement: Vec<u8> = word.iter().map(|&b| b ^ 1).collect();
            let a = decode(&config, &code, &word).unwrap();
            let b = decode(&config, &code, &complement).unwrap();
            assert_eq!(a.converged, b.converged);
            assert_eq!(a.iterations_used, b.iterations_used);
            let flipped: Vec<u8> = a.hard_decision.iter().map(|&x| x ^ 1).collect();
            assert_eq!(b.hard_decision, flipped);
            let (ta, tb) = (a.trace.unwrap(), b.trace.unwrap());
            for (ra, rb) in ta.iter().zip(&tb) {
                let neg: Vec<f64> = ra.var_to_chk.iter().map(|&m| -m).collect();
                assert_eq!(rb.var_to_chk, neg);
                let neg: Vec<f64> = ra.chk_to_var.iter().map(|&m| -m).collect();
                assert_eq!(rb.chk_to_var, neg);
            }
        }
    }
}
