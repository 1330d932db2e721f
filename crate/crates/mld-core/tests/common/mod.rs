//! Shared validation of (9,5) trapping-set candidates against the
//! three-error reference trace.
//!
//! Canonical labeling: variables 0..2 are the errors, 3 and 4 the two
//! correct variables that receive all-negative messages in iteration 1,
//! 5..8 the rest. A candidate passes when, under the 7-level LT decoder
//! on the isolated subgraph:
//!
//! - iteration 1: errors send -L1 on every edge, correct variables +L1,
//!   and variables 3 and 4 receive (-L1, -L1, -L1);
//! - iteration 2: variables 0..4 send 0 on every edge, and at least two
//!   of the errors receive the multiset {0, 0, +L1};
//! - the decode converges at the end of iteration 3 exactly,
//!
//! and min-sum on the same pattern converges at the end of iteration 4
//! exactly.

use mld_core::engine::EdgeLayout;
use mld_core::isolation::{decode_isolated, IsolationTrace, SubgraphSpec};
use mld_core::pattern::ErrorPattern;
use mld_core::rules::{LtRules, MinSumRules};

pub const ERRORS: [usize; 3] = [0, 1, 2];
pub const ALL_NEGATIVE: [usize; 2] = [3, 4];

fn outgoing<M: Copy>(layout: &EdgeLayout, msgs: &[M], v: usize) -> Vec<M> {
    layout.var_edges(v).map(|e| msgs[e]).collect()
}

fn incoming_sorted(layout: &EdgeLayout, msgs: &[i32], v: usize) -> Vec<i32> {
    let mut m: Vec<i32> = layout.var_edges(v).map(|e| msgs[e]).collect();
    m.sort_unstable();
    m
}

/// Check a candidate against every quoted message of the reference
/// trace. Returns a description of the first violated constraint.
pub fn validate_example_trace(sub: &SubgraphSpec) -> Result<(), String> {
    let n = sub.graph().num_variables();
    if n != 9 {
        return Err(format!("expected 9 variables, got {n}"));
    }
    let pattern = ErrorPattern::from_sorted(ERRORS.to_vec(), 9).expect("valid pattern");
    let layout = EdgeLayout::new(sub.graph());

    let lt = LtRules::lt7_default();
    let l1 = 2i32;
    let trace: IsolationTrace<i32> =
        decode_isolated(&lt, sub, &pattern, 20, true).map_err(|e| e.to_string())?;

    if trace.converged_at != Some(3) {
        return Err(format!("lt-7 converged at {:?}, want end of iteration 3", trace.converged_at));
    }
    let it1 = &trace.iterations[0];
    let it2 = &trace.iterations[1];

    for v in 0..9 {
        let expect = if ERRORS.contains(&v) { -l1 } else { l1 };
        if outgoing(&layout, &it1.var_to_chk, v).iter().any(|&m| m != expect) {
            return Err(format!("iteration-1 output of v{v} is not uniformly {expect}"));
        }
    }
    for v in ALL_NEGATIVE {
        if incoming_sorted(&layout, &it1.chk_to_var, v) != vec![-l1, -l1, -l1] {
            return Err(format!("iteration-1 incoming of v{v} is not (-L1, -L1, -L1)"));
        }
    }
    for v in 0..5 {
        if outgoing(&layout, &it2.var_to_chk, v).iter().any(|&m| m != 0) {
            return Err(format!("iteration-2 output of v{v} is not all-zero"));
        }
    }
    let with_multiset = ERRORS
        .iter()
        .filter(|&&v| incoming_sorted(&layout, &it2.chk_to_var, v) == vec![0, 0, l1])
        .count();
    if with_multiset < 2 {
        return Err(format!(
            "only {with_multiset} errors receive the iteration-2 multiset (0, 0, L1)"
        ));
    }

    let ms = decode_isolated(&MinSumRules, sub, &pattern, 20, false).map_err(|e| e.to_string())?;
    if ms.converged_at != Some(4) {
        return Err(format!(
            "min-sum converged at {:?}, want end of iteration 4",
            ms.converged_at
        ));
    }
    Ok(())
}

/// Structural requirements: (9,5) label, exactly three degree-one
/// checks, 3-left-regular, no two checks sharing two variables,
/// connected, and a (6,2) trapping set among the variable subsets.
pub fn validate_shape(sub: &SubgraphSpec) -> Result<(), String> {
    let g = sub.graph();
    if sub.label() != (9, 5) {
        return Err(format!("label {:?}, want (9, 5)", sub.label()));
    }
    if sub.degree_one_checks().len() != 3 {
        return Err(format!("{} degree-one checks, want 3", sub.degree_one_checks().len()));
    }
    if g.left_regular_degree() != Some(3) {
        return Err("not 3-left-regular".into());
    }
    for a in 0..g.num_checks() {
        for b in a + 1..g.num_checks() {
            let shared = g
                .chk_neighbors(a)
                .iter()
                .filter(|v| g.chk_neighbors(b).contains(v))
                .count();
            if shared > 1 {
                return Err(format!("checks {a} and {b} form a four-cycle"));
            }
        }
    }
    if !is_connected(sub) {
        return Err("subgraph is not connected".into());
    }
    if !contains_6_2(sub) {
        return Err("no (6,2) trapping set contained".into());
    }
    Ok(())
}

fn is_connected(sub: &SubgraphSpec) -> bool {
    let g = sub.graph();
    let total = g.num_variables() + g.num_checks();
    let mut seen = vec![false; total];
    let mut stack = vec![0usize]; // variable 0
    seen[0] = true;
    let mut count = 0;
    while let Some(node) = stack.pop() {
        count += 1;
        if node < g.num_variables() {
            for &c in g.var_neighbors(node) {
                let idx = g.num_variables() + c;
                if !seen[idx] {
                    seen[idx] = true;
                    stack.push(idx);
                }
            }
        } else {
            for &v in g.chk_neighbors(node - g.num_variables()) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    count == total
}

/// Does any 6-variable subset induce a subgraph with exactly two
/// odd-degree checks?
pub fn contains_6_2(sub: &SubgraphSpec) -> bool {
    let g = sub.graph();
    let n = g.num_variables();
    // All 6-subsets of [0, 9).
    let mut subset = [0usize; 6];
    fn rec(
        g: &mld_core::TannerGraph,
        n: usize,
        subset: &mut [usize; 6],
        depth: usize,
        start: usize,
    ) -> bool {
        if depth == 6 {
            let odd = (0..g.num_checks())
                .filter(|&c| {
                    g.chk_neighbors(c).iter().filter(|v| subset.contains(v)).count() % 2 == 1
                })
                .count();
            return odd == 2;
        }
        for v in start..n {
            subset[depth] = v;
            if rec(g, n, subset, depth + 1, v + 1) {
                return true;
            }
        }
        false
    }
    rec(g, n, &mut subset, 0, 0)
}
