//! Reference trapping-set topologies and host-graph builders.
//!
//! The shipped (9,5) subgraph is a reconstruction: it is a
//! 3-left-regular nine-variable trapping set with five odd-degree
//! checks, exactly three degree-one checks, and a (6,2) trapping set
//! inside, on which the 7-level LT decoder corrects the three-error
//! pattern `{v0, v1, v2}` in exactly three iterations while min-sum
//! needs four. `tests/fixture_search.rs` re-derives a topology with
//! these properties by constrained search and validates this one
//! message-by-message.

use crate::code::{CodeSpec, TannerGraph};
use crate::comptree::Embedding;
use crate::isolation::SubgraphSpec;
use crate::pattern::ErrorPattern;
use alloc::vec;
use alloc::vec::Vec;

/// Check adjacency of the (9,5) fixture: nine degree-2 checks, two
/// degree-3 checks (7 and 9), and the degree-one set {10, 12, 13}.
///
/// This is the lexicographically first topology found by the canonical
/// constrained search in `tests/fixture_search.rs`.
pub const TS_9_5_CHECKS: [&[usize]; 14] = [
    &[0, 3],
    &[0, 4],
    &[0, 5],
    &[1, 3],
    &[1, 4],
    &[1, 5],
    &[2, 3],
    &[2, 4, 6],
    &[2, 7],
    &[5, 6, 7],
    &[6],
    &[7, 8],
    &[8],
    &[8],
];

/// Check adjacency of the (6,2) fixture: the subgraph the first six
/// variables of the (9,5) induce. Checks 8 and 9 have degree one.
pub const TS_6_2_CHECKS: [&[usize]; 10] = [
    &[0, 3],
    &[0, 4],
    &[0, 5],
    &[1, 3],
    &[1, 4],
    &[1, 5],
    &[2, 3],
    &[2, 4],
    &[2],
    &[5],
];

fn subgraph_from_checks(n: usize, checks: &[&[usize]]) -> SubgraphSpec {
    let edges = checks
        .iter()
        .enumerate()
        .flat_map(|(c, vars)| vars.iter().map(move |&v| (v, c)));
    let graph = TannerGraph::from_edges(n, checks.len(), edges)
        .expect("fixture adjacency is valid");
    let degree_one = (0..checks.len()).filter(|&c| checks[c].len() == 1).collect();
    SubgraphSpec::new(graph, degree_one).expect("fixture degree-one set is exact")
}

/// The reconstructed (9,5) trapping-set subgraph.
pub fn trapping_set_9_5() -> SubgraphSpec {
    subgraph_from_checks(9, &TS_9_5_CHECKS)
}

/// The (6,2) trapping-set subgraph contained in the (9,5) one.
pub fn trapping_set_6_2() -> SubgraphSpec {
    subgraph_from_checks(6, &TS_6_2_CHECKS)
}

/// The three-error pattern `{v0, v1, v2}` on the (9,5) fixture.
pub fn example_error_pattern() -> ErrorPattern {
    ErrorPattern::from_sorted(vec![0, 1, 2], 9).expect("pattern is valid")
}

/// Embed a 3-left-regular subgraph in a host code built by hanging
/// all-correct trees off every degree-one check.
///
/// Each degree-one check gains two fresh variables; each fresh variable
/// two fresh checks; each fresh check two leaf variables; the eight
/// leaves of one tree are closed into a ring of degree-two cap checks.
/// The host is 3-left-regular, contains the subgraph on its first node
/// indices (identity embedding), and satisfies the isolation assumption
/// for two iterations but not three.
pub fn tree_extended_host(sub: &SubgraphSpec, name: &str) -> (CodeSpec, Embedding) {
    let h = sub.graph();
    assert_eq!(
        h.left_regular_degree(),
        Some(3),
        "host construction expects a 3-left-regular subgraph"
    );
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for c in 0..h.num_checks() {
        for &v in h.chk_neighbors(c) {
            edges.push((v, c));
        }
    }
    let mut next_var = h.num_variables();
    let mut next_chk = h.num_checks();
    for &w in sub.degree_one_checks() {
        let mut leaves = Vec::with_capacity(8);
        for _ in 0..2 {
            let vf = next_var;
            next_var += 1;
            edges.push((vf, w));
            for _ in 0..2 {
                let cf = next_chk;
                next_chk += 1;
                edges.push((vf, cf));
                for _ in 0..2 {
                    let leaf = next_var;
                    next_var += 1;
                    edges.push((leaf, cf));
                    leaves.push(leaf);
                }
            }
        }
        // Ring of cap checks over this tree's eight leaves.
        for i in 0..leaves.len() {
            let cap = next_chk;
            next_chk += 1;
            edges.push((leaves[i], cap));
            edges.push((leaves[(i + 1) % leaves.len()], cap));
        }
    }
    let graph = TannerGraph::from_edges(next_var, next_chk, edges)
        .expect("tree extension yields a valid graph");
    let code = CodeSpec::new(graph, name);
    (code, Embedding::identity(sub))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ts_9_5_shape() {
        let sub = trapping_set_9_5();
        assert_eq!(sub.label(), (9, 5));
        assert_eq!(sub.degree_one_checks(), &[10, 12, 13]);
        assert_eq!(sub.graph().left_regular_degree(), Some(3));
        assert_eq!(sub.graph().num_edges(), 27);
    }

    #[test]
    fn ts_6_2_shape() {
        let sub = trapping_set_6_2();
        assert_eq!(sub.label(), (6, 2));
        assert_eq!(sub.degree_one_checks(), &[8, 9]);
        assert_eq!(sub.graph().left_regular_degree(), Some(3));
        assert_eq!(sub.graph().num_edges(), 18);
    }

    #[test]
    fn ts_6_2_is_the_induced_core_of_ts_9_5() {
        let big = trapping_set_9_5();
        // Check degrees within the first six variables: exactly two odd.
        let odd: Vec<usize> = (0..big.graph().num_checks())
            .filter(|&c| {
                big.graph().chk_neighbors(c).iter().filter(|&&v| v < 6).count() % 2 == 1
            })
            .collect();
        assert_eq!(odd.len(), 2);
    }

    #[test]
    fn no_two_checks_share_two_variables() {
        // Girth at least six: required of a subgraph living inside the
        // codes this decoder family targets.
        for sub in [trapping_set_9_5(), trapping_set_6_2()] {
            let g = sub.graph();
            for a in 0..g.num_checks() {
                for b in a + 1..g.num_checks() {
                    let shared = g
                        .chk_neighbors(a)
                        .iter()
                        .filter(|v| g.chk_neighbors(b).contains(v))
                        .count();
                    assert!(shared <= 1, "checks {a} and {b} share {shared} variables");
                }
            }
        }
    }

    #[test]
    fn tree_extended_host_is_three_left_regular() {
        let sub = trapping_set_9_5();
        let (host, emb) = tree_extended_host(&sub, "ts-9-5-host");
        assert_eq!(host.left_regular_degree, Some(3));
        assert_eq!(host.num_variables(), 9 + 3 * 10);
        assert_eq!(host.num_checks(), 14 + 3 * 12);
        emb.validate(&host.graph, &sub).unwrap();
    }
}
