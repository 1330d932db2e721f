//! Computation trees and the isolation-assumption checker.
//!
//! The computation tree of depth `2k` rooted at a variable node unrolls
//! `k` iterations of message passing (levels alternate between variable
//! and check vertices, with the parent edge excluded). A trapping-set
//! subgraph `H` embedded in a host graph `G` satisfies the isolation
//! assumption for `k` iterations when, for every root in `P`:
//!
//! 1. each degree-one check of `H` appearing with a parent in `P'`
//!    shares no descendants with the sibling subtrees of that parent,
//!    and
//! 2. any two distinct checks of `W \ W'` appearing in the tree share
//!    descendants only inside `P ∪ W`.

use crate::code::TannerGraph;
use crate::isolation::SubgraphSpec;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A node of the host graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GNode {
    Var(usize),
    Chk(usize),
}

impl fmt::Display for GNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GNode::Var(v) => write!(f, "v{v}"),
            GNode::Chk(c) => write!(f, "c{c}"),
        }
    }
}

/// Injective map from subgraph nodes to host nodes, variables and
/// checks separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub var_map: Vec<usize>,
    pub chk_map: Vec<usize>,
}

/// Errors from embedding validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    WrongLength { vars_expected: usize, chks_expected: usize },
    OutOfRange(GNode),
    NotInjective(GNode),
    /// An edge of the subgraph has no image in the host.
    EdgeNotPreserved { sub_var: usize, sub_chk: usize },
    /// A mapped check touches more mapped variables than its subgraph
    /// degree: the subgraph is not the induced one.
    NotInduced { sub_chk: usize },
    /// A mapped variable has a host neighbor outside the mapped check
    /// set; trapping-set variables keep all their edges in the subgraph.
    VariableEdgeLeavesSubgraph { sub_var: usize, host_chk: usize },
}

impl fmt::Display for EmbeddingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbeddingError::WrongLength { vars_expected, chks_expected } => {
                write!(f, "embedding must map {vars_expected} variables and {chks_expected} checks")
            }
            EmbeddingError::OutOfRange(node) => write!(f, "embedding image {node} out of range"),
            EmbeddingError::NotInjective(node) => write!(f, "embedding repeats image {node}"),
            EmbeddingError::EdgeNotPreserved { sub_var, sub_chk } => {
                write!(f, "subgraph edge (v{sub_var}, c{sub_chk}) has no host edge")
            }
            EmbeddingError::NotInduced { sub_chk } => {
                write!(f, "host image of c{sub_chk} touches unmapped edges to mapped variables")
            }
            EmbeddingError::VariableEdgeLeavesSubgraph { sub_var, host_chk } => {
                write!(f, "mapped variable v{sub_var} has host neighbor c{host_chk} outside the subgraph")
            }
        }
    }
}

impl core::error::Error for EmbeddingError {}

impl Embedding {
    /// Identity embedding for hosts that contain the subgraph as a
    /// prefix of their node numbering.
    pub fn identity(sub: &SubgraphSpec) -> Self {
        Embedding {
            var_map: (0..sub.graph().num_variables()).collect(),
            chk_map: (0..sub.graph().num_checks()).collect(),
        }
    }

    /// Validate injectivity, edge preservation, and that the image is
    /// the subgraph induced by the mapped variables.
    pub fn validate(&self, host: &TannerGraph, sub: &SubgraphSpec) -> Result<(), EmbeddingError> {
        let h = sub.graph();
        if self.var_map.len() != h.num_variables() || self.chk_map.len() != h.num_checks() {
            return Err(EmbeddingError::WrongLength {
                vars_expected: h.num_variables(),
                chks_expected: h.num_checks(),
            });
        }
        let mut seen_vars = BTreeSet::new();
        for &gv in &self.var_map {
            if gv >= host.num_variables() {
                return Err(EmbeddingError::OutOfRange(GNode::Var(gv)));
            }
            if !seen_vars.insert(gv) {
                return Err(EmbeddingError::NotInjective(GNode::Var(gv)));
            }
        }
        let mut seen_chks = BTreeSet::new();
        for &gc in &self.chk_map {
            if gc >= host.num_checks() {
                return Err(EmbeddingError::OutOfRange(GNode::Chk(gc)));
            }
            if !seen_chks.insert(gc) {
                return Err(EmbeddingError::NotInjective(GNode::Chk(gc)));
            }
        }
        for hv in 0..h.num_variables() {
            for &hc in h.var_neighbors(hv) {
                if !host.var_neighbors(self.var_map[hv]).contains(&self.chk_map[hc]) {
                    return Err(EmbeddingError::EdgeNotPreserved { sub_var: hv, sub_chk: hc });
                }
            }
        }
        // Induced-subgraph faithfulness in both directions.
        for hc in 0..h.num_checks() {
            let mapped_degree = host
                .chk_neighbors(self.chk_map[hc])
                .iter()
                .filter(|gv| seen_vars.contains(gv))
                .count();
            if mapped_degree != h.chk_neighbors(hc).len() {
                return Err(EmbeddingError::NotInduced { sub_chk: hc });
            }
        }
        for hv in 0..h.num_variables() {
            for &gc in host.var_neighbors(self.var_map[hv]) {
                if !seen_chks.contains(&gc) {
                    return Err(EmbeddingError::VariableEdgeLeavesSubgraph {
                        sub_var: hv,
                        host_chk: gc,
                    });
                }
            }
        }
        Ok(())
    }
}

/// One vertex of an unrolled computation tree.
#[derive(Debug, Clone)]
struct TreeVertex {
    node: GNode,
    parent: Option<usize>,
    depth: usize,
    children: Vec<usize>,
}

/// Computation tree of `k` iterations (depth `2k`) rooted at a host
/// variable.
#[derive(Debug, Clone)]
pub struct ComputationTree {
    vertices: Vec<TreeVertex>,
}

impl ComputationTree {
    pub fn expand(host: &TannerGraph, root: usize, k: usize) -> Self {
        let mut vertices = vec![TreeVertex {
            node: GNode::Var(root),
            parent: None,
            depth: 0,
            children: Vec::new(),
        }];
        let mut frontier = vec![0usize];
        let max_depth = 2 * k;
        while let Some(idx) = frontier.pop() {
            let (node, depth, parent) =
                (vertices[idx].node, vertices[idx].depth, vertices[idx].parent);
            if depth == max_depth {
                continue;
            }
            let parent_node = parent.map(|p| vertices[p].node);
            let neighbors: Vec<GNode> = match node {
                GNode::Var(v) => host.var_neighbors(v).iter().map(|&c| GNode::Chk(c)).collect(),
                GNode::Chk(c) => host.chk_neighbors(c).iter().map(|&v| GNode::Var(v)).collect(),
            };
            for nb in neighbors {
                if Some(nb) == parent_node {
                    continue;
                }
                let child = vertices.len();
                vertices.push(TreeVertex {
                    node: nb,
                    parent: Some(idx),
                    depth: depth + 1,
                    children: Vec::new(),
                });
                vertices[idx].children.push(child);
                frontier.push(child);
            }
        }
        ComputationTree { vertices }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Graph nodes strictly below vertex `idx`.
    fn descendants(&self, idx: usize) -> BTreeSet<GNode> {
        let mut out = BTreeSet::new();
        let mut stack: Vec<usize> = self.vertices[idx].children.clone();
        while let Some(i) = stack.pop() {
            out.insert(self.vertices[i].node);
            stack.extend(self.vertices[i].children.iter().copied());
        }
        out
    }

    /// Depth of the first vertex below `idx` whose graph node is `node`.
    fn depth_of_descendant(&self, idx: usize, node: GNode) -> Option<usize> {
        let mut stack: Vec<usize> = self.vertices[idx].children.clone();
        let mut best: Option<usize> = None;
        while let Some(i) = stack.pop() {
            if self.vertices[i].node == node {
                best = Some(best.map_or(self.vertices[i].depth, |b: usize| b.min(self.vertices[i].depth)));
            }
            stack.extend(self.vertices[i].children.iter().copied());
        }
        best
    }
}

/// The first observed violation of the isolation assumption.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsolationViolation {
    /// A degree-one check's subtree shares `shared` with a sibling
    /// subtree of its parent variable.
    DegreeOneOverlap {
        root: usize,
        degree_one_check: usize,
        sibling_check: usize,
        shared: GNode,
        depth: usize,
    },
    /// Two checks of `W \ W'` share a descendant outside `P ∪ W`.
    SharedOutsideSubgraph {
        root: usize,
        check_a: usize,
        check_b: usize,
        shared: GNode,
        depth: usize,
    },
}

impl fmt::Display for IsolationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsolationViolation::DegreeOneOverlap {
                root,
                degree_one_check,
                sibling_check,
                shared,
                depth,
            } => write!(
                f,
                "root v{root}: degree-one check c{degree_one_check} shares {shared} with sibling c{sibling_check} at depth {depth}"
            ),
            IsolationViolation::SharedOutsideSubgraph { root, check_a, check_b, shared, depth } => {
                write!(
                    f,
                    "root v{root}: checks c{check_a} and c{check_b} share {shared} outside the subgraph at depth {depth}"
                )
            }
        }
    }
}

/// Outcome of the isolation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolationVerdict {
    pub iterations: usize,
    pub violation: Option<IsolationViolation>,
}

impl IsolationVerdict {
    pub fn isolated(&self) -> bool {
        self.violation.is_none()
    }
}

/// Check whether the embedded subgraph satisfies the isolation
/// assumption in `host` for `k` iterations.
///
/// Expands the computation tree of every root in `P` to depth `2k` and
/// verifies both conditions; the first violation (by ascending root) is
/// reported.
pub fn check_isolation(
    host: &TannerGraph,
    sub: &SubgraphSpec,
    embedding: &Embedding,
    k: usize,
) -> Result<IsolationVerdict, EmbeddingError> {
    embedding.validate(host, sub)?;

    let p_set: BTreeSet<usize> = embedding.var_map.iter().copied().collect();
    let w_set: BTreeSet<usize> = embedding.chk_map.iter().copied().collect();
    let w_prime: BTreeSet<usize> = sub
        .degree_one_checks()
        .iter()
        .map(|&hc| embedding.chk_map[hc])
        .collect();
    // Variables of P with a degree-one check neighbor, as host ids.
    let p_prime: BTreeSet<usize> = sub
        .boundary_variables()
        .iter()
        .map(|&hv| embedding.var_map[hv])
        .collect();
    let in_subgraph = |node: &GNode| match node {
        GNode::Var(v) => p_set.contains(v),
        GNode::Chk(c) => w_set.contains(c),
    };

    for &root in embedding.var_map.iter() {
        let tree = ComputationTree::expand(host, root, k);

        // Condition 1: subtrees under degree-one checks with parents in
        // P' are disjoint from their sibling subtrees.
        for idx in 0..tree.vertices.len() {
            let GNode::Chk(c) = tree.vertices[idx].node else { continue };
            if !w_prime.contains(&c) {
                continue;
            }
            let Some(parent) = tree.vertices[idx].parent else { continue };
            let GNode::Var(pv) = tree.vertices[parent].node else { continue };
            if !p_prime.contains(&pv) {
                continue;
            }
            let own = tree.descendants(idx);
            for &sibling in &tree.vertices[parent].children {
                if sibling == idx {
                    continue;
                }
                let other = tree.descendants(sibling);
                if let Some(&shared) = own.intersection(&other).next() {
                    let GNode::Chk(sc) = tree.vertices[sibling].node else { continue };
                    let depth = tree
                        .depth_of_descendant(sibling, shared)
                        .unwrap_or(tree.vertices[sibling].depth);
                    return Ok(IsolationVerdict {
                        iterations: k,
                        violation: Some(IsolationViolation::DegreeOneOverlap {
                            root,
                            degree_one_check: c,
                            sibling_check: sc,
                            shared,
                            depth,
                        }),
                    });
                }
            }
        }

        // Condition 2: descendants shared by two distinct W \ W' checks
        // stay inside P ∪ W. Descendant sets are unioned over all
        // occurrences of the same graph check.
        let mut desc_by_check: BTreeMap<usize, (BTreeSet<GNode>, Vec<usize>)> = BTreeMap::new();
        for idx in 0..tree.vertices.len() {
            let GNode::Chk(c) = tree.vertices[idx].node else { continue };
            if !w_set.contains(&c) || w_prime.contains(&c) {
                continue;
            }
            let entry = desc_by_check.entry(c).or_default();
            entry.0.extend(tree.descendants(idx));
            entry.1.push(idx);
        }
        let checks: Vec<usize> = desc_by_check.keys().copied().collect();
        for (i, &ca) in checks.iter().enumerate() {
            for &cb in &checks[i + 1..] {
                let (da, _) = &desc_by_check[&ca];
                let (db, occ_b) = &desc_by_check[&cb];
                if let Some(&shared) =
                    da.intersection(db).find(|node| !in_subgraph(node))
                {
                    let depth = occ_b
                        .iter()
                        .filter_map(|&idx| tree.depth_of_descendant(idx, shared))
                        .min()
                        .unwrap_or(0);
                    return Ok(IsolationVerdict {
                        iterations: k,
                        violation: Some(IsolationViolation::SharedOutsideSubgraph {
                            root,
                            check_a: ca,
                            check_b: cb,
                            shared,
                            depth,
                        }),
                    });
                }
            }
        }
    }

    Ok(IsolationVerdict { iterations: k, violation: None })
}
