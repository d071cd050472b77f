//! Exact minor containment for small graphs.
//!
//! `H` is a minor of `G` when `G` has disjoint connected vertex sets (branch
//! sets), one per vertex of `H`, with a `G`-edge between the branch sets of
//! every edge of `H`. The search is exhaustive, so a negative answer is a
//! proof; inputs beyond the budget are refused rather than truncated.

mod cycles;
mod search;
mod subgraph;

pub use cycles::{circumference, max_disjoint_cycles, CYCLE_BUDGET};

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError, Vertex};

/// Branch set of every `H` vertex. Serializes as `{"0": [..], "1": [..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MinorEmbedding {
    pub branch_sets: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

/// Size limits for [`has_minor_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorBudget {
    /// Largest host accepted for any pattern.
    pub max_host: usize,
    /// Largest host accepted when the pattern is small.
    pub max_host_small_pattern: usize,
    /// Patterns with at most this many vertices count as small.
    pub small_pattern: usize,
}

impl Default for MinorBudget {
    fn default() -> Self {
        MinorBudget { max_host: 14, max_host_small_pattern: 20, small_pattern: 5 }
    }
}

impl MinorBudget {
    pub fn limit_for(&self, h: &Graph) -> usize {
        if h.v() <= self.small_pattern {
            self.max_host.max(self.max_host_small_pattern)
        } else {
            self.max_host
        }
    }
}

pub fn has_minor(g: &Graph, h: &Graph) -> Result<Option<MinorEmbedding>, GraphError> {
    has_minor_with(g, h, &MinorBudget::default())
}

pub fn has_minor_with(g: &Graph, h: &Graph, budget: &MinorBudget) -> Result<Option<MinorEmbedding>, GraphError> {
    let limit = budget.limit_for(h).min(64);
    if g.v() > limit {
        return Err(GraphError::BudgetExceeded { n: g.v(), budget: limit });
    }
    if h.v() > g.v() || h.e() > g.e() {
        return Ok(None);
    }
    if h.is_null() {
        return Ok(Some(MinorEmbedding { branch_sets: BTreeMap::new() }));
    }
    let adj = g.masks();
    let h_adj = h.masks();
    let h_comps = h.components();
    let smallest = h_comps.iter().map(Vec::len).min().unwrap_or(0);
    let g_comps: Vec<u64> = g
        .components()
        .into_iter()
        .filter(|c| c.len() >= smallest)
        .map(|c| c.iter().fold(0u64, |acc, &v| acc | 1 << v))
        .collect();
    // a model covers whole components, each hosting at least one H component
    for pick in component_choices(g_comps.len(), h_comps.len()) {
        let used = pick.iter().fold(0u64, |acc, &i| acc | g_comps[i]);
        if (used.count_ones() as usize) < h.v() {
            continue;
        }
        if let Some(sets) = search::Search::new(&adj, &h_adj, used).run() {
            let branch_sets = sets
                .into_iter()
                .enumerate()
                .map(|(u, mask)| (u, (0..g.v()).filter(|&v| mask >> v & 1 == 1).collect()))
                .collect();
            let emb = MinorEmbedding { branch_sets };
            debug_assert!(validate_embedding(g, h, &emb).is_ok());
            return Ok(Some(emb));
        }
    }
    Ok(None)
}

/// Non-empty subsets of `0..count` with at most `max` elements, smallest first.
fn component_choices(count: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    fn rec(start: usize, count: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max {
            return;
        }
        for i in start..count {
            cur.push(i);
            rec(i + 1, count, max, cur, out);
            cur.pop();
        }
    }
    rec(0, count, max, &mut Vec::new(), &mut out);
    out.sort_by_key(|c| c.len());
    out
}

/// Checks an embedding from scratch: one non-empty branch set per `H`
/// vertex, pairwise disjoint, each inducing a connected subgraph of `G`,
/// and a `G`-edge between the branch sets of every `H` edge.
pub fn validate_embedding(g: &Graph, h: &Graph, emb: &MinorEmbedding) -> Result<(), String> {
    let keys: Vec<_> = emb.branch_sets.keys().copied().collect();
    if keys != (0..h.v()).collect::<Vec<_>>() {
        return Err(format!("branch sets are keyed by {keys:?}, expected 0..{}", h.v()));
    }
    let mut owner = vec![None; g.v()];
    for (&u, set) in &emb.branch_sets {
        if set.is_empty() {
            return Err(format!("branch set of {u} is empty"));
        }
        for &v in set {
            if v >= g.v() {
                return Err(format!("branch set of {u} contains {v}, outside the host"));
            }
            if let Some(other) = owner[v].replace(u) {
                return Err(format!("vertex {v} is in the branch sets of {other} and {u}"));
            }
        }
        let (sub, _) = g.induced_subgraph(set).expect("range checked");
        if sub.components().len() != 1 {
            return Err(format!("branch set of {u} is not connected"));
        }
    }
    for (a, b) in h.edges() {
        let joined = emb.branch_sets[&a]
            .iter()
            .any(|&x| g.neighbors(x).any(|y| owner[y] == Some(b)));
        if !joined {
            return Err(format!("no host edge between the branch sets of {a} and {b}"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
