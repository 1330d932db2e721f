//! Binary LDPC codes as Tanner graphs.
//!
//! A [`TannerGraph`] stores the bipartite adjacency between variable nodes
//! (code bits) and check nodes (parity constraints) in both directions.
//! [`CodeSpec`] adds a label and degree metadata, and [`QcShiftMatrix`]
//! describes a quasi-cyclic code as a grid of circulant shifts.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from graph construction and syndrome computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeError {
    /// An edge references a node index outside `[0, n)` or `[0, m)`.
    IndexOutOfRange { variable: usize, check: usize },
    /// The same (variable, check) pair appears more than once.
    DuplicateEdge { variable: usize, check: usize },
    /// Variable-side and check-side adjacency do not describe the same
    /// edge set.
    AdjacencyMismatch { variable: usize, check: usize },
    /// A node has no neighbors.
    IsolatedNode { is_check: bool, index: usize },
    /// A bit vector has the wrong length.
    LengthMismatch { expected: usize, got: usize },
    /// A circulant shift is not smaller than the circulant size.
    ShiftOutOfRange { row: usize, col: usize, shift: usize, circulant: usize },
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::IndexOutOfRange { variable, check } => {
                write!(f, "edge (v{variable}, c{check}) out of range")
            }
            CodeError::DuplicateEdge { variable, check } => {
                write!(f, "repeated edge between v{variable} and c{check}")
            }
            CodeError::AdjacencyMismatch { variable, check } => {
                write!(f, "adjacency lists disagree on edge (v{variable}, c{check})")
            }
            CodeError::IsolatedNode { is_check, index } => {
                let kind = if *is_check { "check" } else { "variable" };
                write!(f, "{kind} node {index} has no neighbors")
            }
            CodeError::LengthMismatch { expected, got } => {
                write!(f, "bit vector length {got}, expected {expected}")
            }
            CodeError::ShiftOutOfRange { row, col, shift, circulant } => {
                write!(f, "shift {shift} at block ({row},{col}) not below circulant size {circulant}")
            }
        }
    }
}

impl core::error::Error for CodeError {}

/// Bipartite adjacency of a binary LDPC code.
///
/// Both directions are stored; they always describe the same edge set.
/// Edge order within each node's list is preserved from the construction
/// source, and decoders must not depend on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TannerGraph {
    var_adj: Vec<Vec<usize>>,
    chk_adj: Vec<Vec<usize>>,
}

impl TannerGraph {
    /// Build from an edge list. Both adjacency sides pick up the edge
    /// order of the iterator.
    pub fn from_edges(
        n: usize,
        m: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, CodeError> {
        let mut var_adj = vec![Vec::new(); n];
        let mut chk_adj = vec![Vec::new(); m];
        for (v, c) in edges {
            if v >= n || c >= m {
                return Err(CodeError::IndexOutOfRange { variable: v, check: c });
            }
            if var_adj[v].contains(&c) {
                return Err(CodeError::DuplicateEdge { variable: v, check: c });
            }
            var_adj[v].push(c);
            chk_adj[c].push(v);
        }
        let graph = TannerGraph { var_adj, chk_adj };
        graph.check_degrees()?;
        Ok(graph)
    }

    /// Build from both adjacency sides, validating that they agree.
    ///
    /// Edge order of each side is kept exactly as given.
    pub fn from_adjacency(
        var_adj: Vec<Vec<usize>>,
        chk_adj: Vec<Vec<usize>>,
    ) -> Result<Self, CodeError> {
        let n = var_adj.len();
        let m = chk_adj.len();
        for (v, checks) in var_adj.iter().enumerate() {
            for (i, &c) in checks.iter().enumerate() {
                if c >= m {
                    return Err(CodeError::IndexOutOfRange { variable: v, check: c });
                }
                if checks[..i].contains(&c) {
                    return Err(CodeError::DuplicateEdge { variable: v, check: c });
                }
                if !chk_adj[c].contains(&v) {
                    return Err(CodeError::AdjacencyMismatch { variable: v, check: c });
                }
            }
        }
        for (c, vars) in chk_adj.iter().enumerate() {
            for (i, &v) in vars.iter().enumerate() {
                if v >= n {
                    return Err(CodeError::IndexOutOfRange { variable: v, check: c });
                }
                if vars[..i].contains(&v) {
                    return Err(CodeError::DuplicateEdge { variable: v, check: c });
                }
                if !var_adj[v].contains(&c) {
                    return Err(CodeError::AdjacencyMismatch { variable: v, check: c });
                }
            }
        }
        let graph = TannerGraph { var_adj, chk_adj };
        graph.check_degrees()?;
        Ok(graph)
    }

    fn check_degrees(&self) -> Result<(), CodeError> {
        if let Some(v) = self.var_adj.iter().position(|l| l.is_empty()) {
            return Err(CodeError::IsolatedNode { is_check: false, index: v });
        }
        if let Some(c) = self.chk_adj.iter().position(|l| l.is_empty()) {
            return Err(CodeError::IsolatedNode { is_check: true, index: c });
        }
        Ok(())
    }

    /// Number of variable nodes.
    pub fn num_variables(&self) -> usize {
        self.var_adj.len()
    }

    /// Number of check nodes.
    pub fn num_checks(&self) -> usize {
        self.chk_adj.len()
    }

    /// Total edge count.
    pub fn num_edges(&self) -> usize {
        self.var_adj.iter().map(Vec::len).sum()
    }

    /// Checks adjacent to variable `v`, in source order.
    pub fn var_neighbors(&self, v: usize) -> &[usize] {
        &self.var_adj[v]
    }

    /// Variables adjacent to check `c`, in source order.
    pub fn chk_neighbors(&self, c: usize) -> &[usize] {
        &self.chk_adj[c]
    }

    /// `Some(d)` when every variable node has degree `d`.
    pub fn left_regular_degree(&self) -> Option<usize> {
        let d = self.var_adj.first()?.len();
        self.var_adj.iter().all(|l| l.len() == d).then_some(d)
    }

    /// Returns a copy with every adjacency list reordered by `perm_seed`.
    ///
    /// Used to verify that decoders do not depend on edge order.
    pub fn shuffled(&self, perm_seed: u64) -> TannerGraph {
        let mut rng = crate::channel::SplitMix64::new(perm_seed);
        let mut shuffle = |list: &mut Vec<usize>| {
            for i in (1..list.len()).rev() {
                let j = (rng.next_u64() % (i as u64 + 1)) as usize;
                list.swap(i, j);
            }
        };
        let mut var_adj = self.var_adj.clone();
        let mut chk_adj = self.chk_adj.clone();
        var_adj.iter_mut().for_each(&mut shuffle);
        chk_adj.iter_mut().for_each(&mut shuffle);
        TannerGraph { var_adj, chk_adj }
    }
}

/// A named code: Tanner graph plus informational metadata.
#[derive(Debug, Clone)]
pub struct CodeSpec {
    pub graph: TannerGraph,
    pub name: String,
    /// Design rate as a (numerator, denominator) pair; informational only.
    pub rate_design: (u64, u64),
    /// Present iff all variable degrees are equal.
    pub left_regular_degree: Option<usize>,
}

impl CodeSpec {
    /// Wrap a graph, deriving the degree metadata and design rate
    /// `(n - m) / n` (clamped at zero).
    pub fn new(graph: TannerGraph, name: impl Into<String>) -> Self {
        let n = graph.num_variables() as u64;
        let m = graph.num_checks() as u64;
        let left_regular_degree = graph.left_regular_degree();
        CodeSpec {
            graph,
            name: name.into(),
            rate_design: (n.saturating_sub(m), n),
            left_regular_degree,
        }
    }

    pub fn num_variables(&self) -> usize {
        self.graph.num_variables()
    }

    pub fn num_checks(&self) -> usize {
        self.graph.num_checks()
    }
}

/// Quasi-cyclic code description: a grid of circulant blocks.
///
/// Entry `Some(s)` places a `p x p` circulant permutation with shift `s`;
/// `None` is an all-zero block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QcShiftMatrix {
    pub rows: usize,
    pub cols: usize,
    pub circulant: usize,
    entries: Vec<Option<usize>>,
}

impl QcShiftMatrix {
    pub fn new(
        rows: usize,
        cols: usize,
        circulant: usize,
        entries: Vec<Option<usize>>,
    ) -> Result<Self, CodeError> {
        assert_eq!(entries.len(), rows * cols, "entry grid must be rows x cols");
        for (idx, entry) in entries.iter().enumerate() {
            if let Some(s) = entry {
                if *s >= circulant {
                    return Err(CodeError::ShiftOutOfRange {
                        row: idx / cols,
                        col: idx % cols,
                        shift: *s,
                        circulant,
                    });
                }
            }
        }
        Ok(QcShiftMatrix { rows, cols, circulant, entries })
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.entries[row * self.cols + col]
    }

    /// Expand the circulant description into a Tanner graph.
    ///
    /// A block at `(i, j)` with shift `s` contributes the edges
    /// `(variable j*p + k, check i*p + (k + s) mod p)` for all `k < p`.
    /// Fails only if a whole row or column of blocks is zero, which
    /// leaves isolated nodes.
    pub fn build_qc_code(&self, name: impl Into<String>) -> Result<CodeSpec, CodeError> {
        let p = self.circulant;
        let n = self.cols * p;
        let m = self.rows * p;
        let mut edges = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if let Some(s) = self.entry(i, j) {
                    for k in 0..p {
                        edges.push((j * p + k, i * p + (k + s) % p));
                    }
                }
            }
        }
        Ok(CodeSpec::new(TannerGraph::from_edges(n, m, edges)?, name))
    }
}

/// Parity syndrome of a hard-decision vector: bit `j` is the XOR of the
/// decision over check `j`'s neighbors. All-zero iff the vector is a
/// codeword.
pub fn syndrome(graph: &TannerGraph, bits: &[u8]) -> Result<Vec<u8>, CodeError> {
    if bits.len() != graph.num_variables() {
        return Err(CodeError::LengthMismatch {
            expected: graph.num_variables(),
            got: bits.len(),
        });
    }
    Ok((0..graph.num_checks())
        .map(|c| graph.chk_neighbors(c).iter().fold(0u8, |s, &v| s ^ (bits[v] & 1)))
        .collect())
}

/// True when `bits` satisfies every parity check.
pub fn is_codeword(graph: &TannerGraph, bits: &[u8]) -> Result<bool, CodeError> {
    Ok(syndrome(graph, bits)?.iter().all(|&b| b == 0))
}

/// Standard shift matrix of the (155, 64) Tanner code: a 3x5 grid of
/// 31x31 circulants with shifts `2^j * 5^i mod 31`.
pub fn tanner_155_shifts() -> QcShiftMatrix {
    let mut entries = Vec::with_capacity(15);
    for i in 0..3u32 {
        for j in 0..5u32 {
            let shift = (pow_mod(2, j, 31) * pow_mod(5, i, 31)) % 31;
            entries.push(Some(shift as usize));
        }
    }
    QcShiftMatrix::new(3, 5, 31, entries).expect("shifts below 31")
}

/// The (155, 64) Tanner code expanded to a Tanner graph.
pub fn tanner_155() -> CodeSpec {
    tanner_155_shifts()
        .build_qc_code("tanner-155")
        .expect("tanner shift matrix has no zero blocks")
}

fn pow_mod(base: u64, exp: u32, modulus: u64) -> u64 {
    let mut acc = 1u64;
    for _ in 0..exp {
        acc = acc * base % modulus;
    }
    acc
}
