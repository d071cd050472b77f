//! Branch-set search.
//!
//! Any minor model can be grown until every component of `G` it touches is
//! covered, so we only look at models that partition a union of whole
//! components into exactly `v(H)` connected blocks, and test whether `H` is a
//! subgraph of the quotient. Large classes of pairwise non-adjacent false
//! twins are placed last and only by count: some members become singleton
//! blocks, the rest join blocks of their common neighbourhood, and it only
//! matters which blocks are joined, not by how many twins.

use std::collections::HashMap;

use super::subgraph::find_subgraph_map;

struct TwinClass {
    members: Vec<usize>,
    nbhd: u64,
}

pub(super) struct Search {
    adj: Vec<u64>,
    h_adj: Vec<u64>,
    k: usize,
    order: Vec<usize>,
    classes: Vec<TwinClass>,
    late_total: usize,
    blocks: Vec<u64>,
    free: u64,
    cache: HashMap<Vec<u64>, Option<Vec<usize>>>,
}

fn lowest(mask: u64) -> usize {
    mask.trailing_zeros() as usize
}

/// Vertices of `within` reachable from `start` inside `within`.
fn reach(adj: &[u64], start: u64, within: u64) -> u64 {
    let mut seen = start & within;
    let mut frontier = seen;
    while frontier != 0 {
        let v = lowest(frontier);
        frontier &= frontier - 1;
        let new = adj[v] & within & !seen;
        seen |= new;
        frontier |= new;
    }
    seen
}

fn connected(adj: &[u64], set: u64) -> bool {
    set != 0 && reach(adj, set & set.wrapping_neg(), set) == set
}

impl Search {
    /// Prepares a search restricted to the vertex set `used`.
    pub(super) fn new(adj: &[u64], h_adj: &[u64], used: u64) -> Search {
        let (classes, late) = twin_classes(adj, used);
        let late_total = late.count_ones() as usize;
        let order = bfs_order(adj, used, late);
        Search {
            adj: adj.to_vec(),
            h_adj: h_adj.to_vec(),
            k: h_adj.len(),
            order,
            classes,
            late_total,
            blocks: Vec::new(),
            free: used,
            cache: HashMap::new(),
        }
    }

    /// Branch sets indexed by `H` vertex, as vertex masks.
    pub(super) fn run(&mut self) -> Option<Vec<u64>> {
        self.place(0)
    }

    fn feasible(&self) -> bool {
        self.blocks.iter().all(|&b| {
            let r = reach(&self.adj, b & b.wrapping_neg(), b | self.free);
            r & b == b
        })
    }

    fn place(&mut self, idx: usize) -> Option<Vec<u64>> {
        if idx == self.order.len() {
            let mut joined = vec![0u64; self.blocks.len()];
            let mut singles = Vec::new();
            return self.place_twins(0, &mut joined, &mut singles);
        }
        let remaining = self.order.len() - idx + self.late_total;
        if self.blocks.len() + remaining < self.k {
            return None;
        }
        let v = self.order[idx];
        let bit = 1u64 << v;
        self.free &= !bit;
        if self.blocks.len() < self.k {
            self.blocks.push(bit);
            if self.feasible() {
                if let Some(found) = self.place(idx + 1) {
                    return Some(found);
                }
            }
            self.blocks.pop();
        }
        // adjacent blocks first
        let mut choices: Vec<usize> = (0..self.blocks.len()).collect();
        choices.sort_by_key(|&b| self.blocks[b] & self.adj[v] == 0);
        for b in choices {
            self.blocks[b] |= bit;
            if self.feasible() {
                if let Some(found) = self.place(idx + 1) {
                    return Some(found);
                }
            }
            self.blocks[b] &= !bit;
        }
        self.free |= bit;
        None
    }

    fn place_twins(&mut self, ci: usize, joined: &mut Vec<u64>, singles: &mut Vec<u64>) -> Option<Vec<u64>> {
        let count = self.blocks.len() + singles.len();
        if ci == self.classes.len() {
            return if count == self.k { self.finish(joined, singles) } else { None };
        }
        let later: usize = self.classes[ci + 1..].iter().map(|c| c.members.len()).sum();
        let members = self.classes[ci].members.clone();
        let nbhd = self.classes[ci].nbhd;
        let m = members.len();
        let adjacent: Vec<usize> = (0..self.blocks.len()).filter(|&b| self.blocks[b] & nbhd != 0).collect();
        for sigma in 0..=m {
            if count + sigma > self.k {
                break;
            }
            if count + sigma + later < self.k {
                continue;
            }
            let rest = m - sigma;
            for &v in &members[..sigma] {
                singles.push(1u64 << v);
            }
            let subsets: Vec<u64> = if rest == 0 {
                vec![0]
            } else {
                (1u64..1 << adjacent.len()).filter(|s| s.count_ones() as usize <= rest).collect()
            };
            for sub in subsets {
                let chosen: Vec<usize> = (0..adjacent.len()).filter(|&i| sub >> i & 1 == 1).map(|i| adjacent[i]).collect();
                let mut extra = 0u64;
                for (slot, &v) in members[sigma..].iter().enumerate() {
                    let b = chosen[slot.min(chosen.len() - 1)];
                    joined[b] |= 1u64 << v;
                    extra |= 1u64 << v;
                }
                if let Some(found) = self.place_twins(ci + 1, joined, singles) {
                    return Some(found);
                }
                for j in joined.iter_mut() {
                    *j &= !extra;
                }
            }
            singles.truncate(singles.len() - sigma);
        }
        None
    }

    fn finish(&mut self, joined: &[u64], singles: &[u64]) -> Option<Vec<u64>> {
        let all: Vec<u64> = self
            .blocks
            .iter()
            .zip(joined)
            .map(|(b, j)| b | j)
            .chain(singles.iter().copied())
            .collect();
        if !all.iter().all(|&b| connected(&self.adj, b)) {
            return None;
        }
        let reach: Vec<u64> = all
            .iter()
            .map(|&b| {
                let mut m = 0;
                let mut rest = b;
                while rest != 0 {
                    m |= self.adj[lowest(rest)];
                    rest &= rest - 1;
                }
                m
            })
            .collect();
        let quotient: Vec<u64> = (0..all.len())
            .map(|i| {
                (0..all.len())
                    .filter(|&j| j != i && reach[i] & all[j] != 0)
                    .fold(0u64, |acc, j| acc | 1 << j)
            })
            .collect();
        let h_adj = &self.h_adj;
        let map = self
            .cache
            .entry(quotient)
            .or_insert_with_key(|q| find_subgraph_map(h_adj, q))
            .clone()?;
        Some(map.into_iter().map(|qi| all[qi]).collect())
    }
}

/// False-twin classes of size at least two, chosen greedily (largest first)
/// so that their union is an independent set. Isolated vertices are skipped.
fn twin_classes(adj: &[u64], used: u64) -> (Vec<TwinClass>, u64) {
    let mut by_nbhd: HashMap<u64, Vec<usize>> = HashMap::new();
    let mut rest = used;
    while rest != 0 {
        let v = lowest(rest);
        rest &= rest - 1;
        if adj[v] != 0 {
            by_nbhd.entry(adj[v]).or_default().push(v);
        }
    }
    let mut groups: Vec<(u64, Vec<usize>)> = by_nbhd.into_iter().filter(|(_, m)| m.len() >= 2).collect();
    groups.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.1[0].cmp(&b.1[0])));
    let mut late = 0u64;
    let mut classes = Vec::new();
    for (nbhd, members) in groups {
        let mask = members.iter().fold(0u64, |acc, &v| acc | 1 << v);
        if nbhd & late == 0 && nbhd & mask == 0 {
            late |= mask;
            classes.push(TwinClass { members, nbhd });
        }
    }
    (classes, late)
}

/// Breadth-first order of `used \ late`, component by component, starting
/// at the smallest vertex and walking through late vertices as well.
fn bfs_order(adj: &[u64], used: u64, late: u64) -> Vec<usize> {
    let mut order = Vec::new();
    let mut seen = 0u64;
    for start in 0..64 {
        let bit = 1u64 << start;
        if used & bit == 0 || seen & bit != 0 {
            continue;
        }
        seen |= bit;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            if late >> v & 1 == 0 {
                order.push(v);
            }
            let mut nb = adj[v] & used & !seen;
            seen |= nb;
            while nb != 0 {
                queue.push_back(lowest(nb));
                nb &= nb - 1;
            }
        }
    }
    order
}
