//! Exact longest-cycle and disjoint-cycle counts by subset dynamic programming.

use crate::graph::{Graph, GraphError};

/// Largest graph accepted by the cycle oracles.
pub const CYCLE_BUDGET: usize = 14;

fn check_budget(g: &Graph) -> Result<(), GraphError> {
    if g.v() > CYCLE_BUDGET {
        return Err(GraphError::BudgetExceeded { n: g.v(), budget: CYCLE_BUDGET });
    }
    Ok(())
}

/// `cyc[S]` is true when `G[S]` has a Hamiltonian cycle (`|S| ≥ 3`).
///
/// `ends[S]` holds the endpoints of paths that start at the smallest vertex
/// of `S` and visit exactly `S`.
fn hamiltonian_subsets(g: &Graph) -> Vec<bool> {
    let n = g.v();
    let adj = g.masks();
    let size = 1usize << n;
    let mut ends = vec![0u64; size];
    let mut cyc = vec![false; size];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..size {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let low = mask.trailing_zeros() as usize;
        if mask.count_ones() >= 3 && e & adj[low] != 0 {
            cyc[mask] = true;
        }
        let mut rest = e;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // only extend with vertices above the start so the start stays minimal
            let mut next = adj[v] & !(mask as u64) & !((1u64 << (low + 1)) - 1);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    cyc
}

/// Length of a longest cycle of `g`, or 0 for a forest.
pub fn circumference(g: &Graph) -> Result<usize, GraphError> {
    check_budget(g)?;
    let cyc = hamiltonian_subsets(g);
    Ok(cyc
        .iter()
        .enumerate()
        .filter(|(_, &c)| c)
        .map(|(mask, _)| mask.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// Largest number of pairwise vertex-disjoint cycles in `g`.
pub fn max_disjoint_cycles(g: &Graph) -> Result<usize, GraphError> {
    check_budget(g)?;
    let cyc = hamiltonian_subsets(g);
    let size = 1usize << g.v();
    let mut best = vec![0u8; size];
    for mask in 1..size {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut value = best[rest];
        let mut sub = rest;
        loop {
            let set = sub | low;
            if cyc[set] {
                value = value.max(1 + best[mask ^ set]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        best[mask] = value;
    }
    Ok(best[size - 1] as usize)
}
