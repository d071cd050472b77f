//! Canonical labelling of small graphs.
//!
//! Colour refinement to an equitable ordered partition, then individualize
//! each vertex of the first smallest non-trivial cell and recurse. Every leaf
//! is a vertex ordering; the canonical code is the smallest adjacency code
//! over all leaves. The search tree only depends on the isomorphism type, so
//! the code does too.

use crate::graph::{Graph, GraphError};

/// Largest graph with a canonical code (the code is a 64-bit pair mask).
pub const CANON_MAX: usize = 11;

type Cells = Vec<Vec<usize>>;

fn refine(adj: &[u64], mut cells: Cells) -> Cells {
    loop {
        let mut cell_of = vec![0usize; adj.len()];
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0u64, |a, &v| a | 1 << v)).collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

/// Code of the ordering `order` (position `i` holds the vertex labelled `i`).
fn code(adj: &[u64], order: &[usize]) -> u64 {
    let n = order.len();
    let mut out = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[order[i]] >> order[j] & 1 == 1 {
                out |= 1 << bit;
            }
            bit += 1;
        }
    }
    out
}

fn search(adj: &[u64], cells: Cells, best: &mut Option<(u64, Vec<usize>)>) {
    let cells = refine(adj, cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(ti) = target else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let c = code(adj, &order);
        if best.as_ref().map_or(true, |(b, _)| c < *b) {
            *best = Some((c, order));
        }
        return;
    };
    for &v in &cells[ti] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..ti]);
        next.push(vec![v]);
        next.push(cells[ti].iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[ti + 1..]);
        search(adj, next, best);
    }
}

/// Canonical code and the matching canonically labelled copy of `g`.
pub fn canonical_form(g: &Graph) -> Result<(u64, Graph), GraphError> {
    let n = g.v();
    if n > CANON_MAX {
        return Err(GraphError::BudgetExceeded { n, budget: CANON_MAX });
    }
    if n == 0 {
        return Ok((0, Graph::null()));
    }
    let adj = g.masks();
    let mut best = None;
    search(&adj, vec![(0..n).collect()], &mut best);
    let (c, order) = best.expect("at least one leaf");
    let mut perm = vec![0; n];
    for (label, &v) in order.iter().enumerate() {
        perm[v] = label;
    }
    Ok((c, g.relabel(&perm)))
}

/// `"n:code"` in hex; equal exactly for isomorphic graphs.
pub fn canonical_key(g: &Graph) -> Result<String, GraphError> {
    let (c, _) = canonical_form(g)?;
    Ok(format!("{}:{c:x}", g.v()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, random_graph};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    #[test]
    fn invariant_under_relabelling() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let n = rng.gen_range(1..=9);
            let m = rng.gen_range(0..=n * (n - 1) / 2);
            let g = random_graph(n, m, &mut rng).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm);
            let (cg, fg) = canonical_form(&g).unwrap();
            let (ch, fh) = canonical_form(&h).unwrap();
            assert_eq!(cg, ch);
            assert_eq!(fg, fh);
            assert_eq!(fg.e(), g.e());
        }
    }

    #[test]
    fn separates_non_isomorphic_graphs() {
        // C6 and 2C3 share the degree sequence
        let c6 = make_cycle(6).unwrap();
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_key(&c6).unwrap(), canonical_key(&two).unwrap());
    }

    /// Counts classes by canonicalizing every labelled graph on `n` vertices.
    fn classes_by_brute_force(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut seen = BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            seen.insert(canonical_form(&Graph::from_edges(n, edges).unwrap()).unwrap().0);
        }
        seen.len()
    }

    #[test]
    fn labelled_enumeration_matches_class_counts() {
        let counts: Vec<usize> = (1..=6).map(classes_by_brute_force).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }
}
