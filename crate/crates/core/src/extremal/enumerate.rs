//! Isomorphism classes of graphs on `n` vertices, one edge count at a time.
//!
//! Every graph with `m + 1` edges is a graph with `m` edges plus one edge,
//! so the classes with `m + 1` edges are the canonical forms of all one-edge
//! extensions of the classes with `m` edges. A property closed under edge
//! deletion can be used as a filter at every level.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::canon::{canonical_form, CANON_MAX};
use crate::graph::{Graph, GraphError};

/// Canonical representatives, sorted by canonical code.
pub type Level = Vec<(u64, Graph)>;

/// One-edge extensions of `level` that pass `keep`.
pub fn next_level<F>(level: &Level, keep: &F) -> Level
where
    F: Fn(&Graph) -> bool + Sync,
{
    let candidates: BTreeMap<u64, Graph> = level
        .par_iter()
        .map(|(_, g)| {
            let n = g.v();
            let mut out = BTreeMap::new();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let (c, canon) = canonical_form(&g.with_edge(u, v)).expect("size checked");
                        out.entry(c).or_insert(canon);
                    }
                }
            }
            out
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                a.entry(k).or_insert(v);
            }
            a
        });
    let candidates: Vec<(u64, Graph)> = candidates.into_iter().collect();
    let keep_flags: Vec<bool> = candidates.par_iter().map(|(_, g)| keep(g)).collect();
    candidates.into_iter().zip(keep_flags).filter(|(_, k)| *k).map(|(c, _)| c).collect()
}

/// Levels `0..` of classes passing `keep`, stopping at the first empty level
/// or after `max_edges`.
pub fn levels<F>(n: usize, max_edges: usize, keep: F) -> Result<Vec<Level>, GraphError>
where
    F: Fn(&Graph) -> bool + Sync,
{
    if n > CANON_MAX {
        return Err(GraphError::BudgetExceeded { n, budget: CANON_MAX });
    }
    let empty = Graph::empty(n);
    if !keep(&empty) {
        return Ok(Vec::new());
    }
    let mut out = vec![vec![canonical_form(&empty)?]];
    while out.len() <= max_edges {
        let next = next_level(out.last().expect("non-empty"), &keep);
        if next.is_empty() {
            break;
        }
        out.push(next);
    }
    Ok(out)
}

/// All classes with exactly `m` edges, via complements when that is shorter.
pub fn classes_with_edges(n: usize, m: usize) -> Result<Vec<Graph>, GraphError> {
    let pairs = n * n.saturating_sub(1) / 2;
    if m > pairs {
        return Ok(Vec::new());
    }
    let depth = m.min(pairs - m);
    let all = levels(n, depth, |_| true)?;
    let level = all.into_iter().nth(depth).unwrap_or_default();
    Ok(if depth == m {
        level.into_iter().map(|(_, g)| g).collect()
    } else {
        level.into_iter().map(|(_, g)| g.complement()).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_up_to_seven() {
        for (n, expected) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)] {
            let total: usize = levels(n, usize::MAX, |_| true).unwrap().iter().map(Vec::len).sum();
            assert_eq!(total, expected, "n = {n}");
        }
    }

    #[test]
    fn fixed_edge_counts() {
        // graphs on 4 vertices by edge count: 1 1 2 3 2 1 1
        let counts: Vec<usize> = (0..=7).map(|m| classes_with_edges(4, m).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 2, 1, 1, 0]);
        assert!(classes_with_edges(6, 13).unwrap().iter().all(|g| g.e() == 13));
    }

    #[test]
    fn filters_apply_per_level() {
        // triangle-free graphs on 5 vertices stop at 6 edges (K_{2,3})
        let tri_free = |g: &Graph| {
            let n = g.v();
            !(0..n).any(|a| (a + 1..n).any(|b| (b + 1..n).any(|c| g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))))
        };
        let lv = levels(5, usize::MAX, tri_free).unwrap();
        assert_eq!(lv.len() - 1, 6);
    }
}
