use rand::seq::index::sample;
use rand::Rng;

use super::{Graph, GraphError};

/// Uniform over labelled graphs on `n` vertices with exactly `m` edges.
pub fn random_graph<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Result<Graph, GraphError> {
    let pairs = n * n.saturating_sub(1) / 2;
    if m > pairs {
        return Err(GraphError::InvalidFamily(format!("{m} edges do not fit on {n} vertices")));
    }
    let picked = sample(rng, pairs, m);
    let mut edges = Vec::with_capacity(m);
    for idx in picked.iter() {
        edges.push(pair_from_index(idx, n));
    }
    Ok(Graph::from_edges_dedup(n, edges))
}

/// Inverse of the row-major enumeration of pairs `u < v`.
fn pair_from_index(mut idx: usize, n: usize) -> (usize, usize) {
    let mut u = 0;
    while idx >= n - 1 - u {
        idx -= n - 1 - u;
        u += 1;
    }
    (u, u + 1 + idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn pair_indexing_covers_all_pairs() {
        let n = 7;
        let all: Vec<_> = (0..21).map(|i| pair_from_index(i, n)).collect();
        let expected: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        assert_eq!(all, expected);
    }

    #[test]
    fn exact_edge_count_and_reproducible() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = random_graph(12, 30, &mut rng).unwrap();
        assert_eq!((g.v(), g.e()), (12, 30));
        let mut rng2 = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(random_graph(12, 30, &mut rng2).unwrap(), g);
        assert!(random_graph(4, 7, &mut rng).is_err());
    }
}
