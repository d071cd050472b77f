//! Injective maps of a small pattern into a host preserving edges.

/// Finds `φ: V(H) → V(Q)` injective with `uv ∈ E(H) ⇒ φ(u)φ(v) ∈ E(Q)`.
/// Both graphs are given as adjacency masks.
pub(super) fn find_subgraph_map(h_adj: &[u64], q_adj: &[u64]) -> Option<Vec<usize>> {
    let k = h_adj.len();
    if k > q_adj.len() {
        return None;
    }
    let h_edges: u32 = h_adj.iter().map(|m| m.count_ones()).sum();
    let q_edges: u32 = q_adj.iter().map(|m| m.count_ones()).sum();
    if h_edges > q_edges {
        return None;
    }
    let order = placement_order(h_adj);
    let mut map = vec![usize::MAX; k];
    let mut used = 0u64;
    if extend(h_adj, q_adj, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Highest degree first, then greedily the vertex with most placed neighbours.
fn placement_order(h_adj: &[u64]) -> Vec<usize> {
    let k = h_adj.len();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (0..k)
            .filter(|&u| placed >> u & 1 == 0)
            .max_by_key(|&u| ((h_adj[u] & placed).count_ones(), h_adj[u].count_ones(), std::cmp::Reverse(u)))
            .expect("vertices remain");
        placed |= 1 << next;
        order.push(next);
    }
    order
}

fn extend(h_adj: &[u64], q_adj: &[u64], order: &[usize], depth: usize, map: &mut [usize], used: &mut u64) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    let need = h_adj[u].count_ones();
    // images of already placed neighbours of u
    let mut required = 0u64;
    for &w in &order[..depth] {
        if h_adj[u] >> w & 1 == 1 {
            required |= 1 << map[w];
        }
    }
    for x in 0..q_adj.len() {
        if *used >> x & 1 == 1 || q_adj[x].count_ones() < need || q_adj[x] & required != required {
            continue;
        }
        map[u] = x;
        *used |= 1 << x;
        if extend(h_adj, q_adj, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << x);
    }
    map[u] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn masks(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
        let mut m = vec![0u64; n];
        for &(u, v) in edges {
            m[u] |= 1 << v;
            m[v] |= 1 << u;
        }
        m
    }

    #[test]
    fn triangle_in_k4_not_in_c4() {
        let c3 = masks(3, &[(0, 1), (1, 2), (0, 2)]);
        let k4 = masks(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let c4 = masks(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let map = find_subgraph_map(&c3, &k4).unwrap();
        assert_eq!(map.len(), 3);
        assert!(find_subgraph_map(&c3, &c4).is_none());
    }

    #[test]
    fn isolated_pattern_vertices_need_distinct_images() {
        let h = masks(3, &[]);
        assert!(find_subgraph_map(&h, &masks(3, &[])).is_some());
        assert!(find_subgraph_map(&h, &masks(2, &[(0, 1)])).is_none());
    }
}
