use super::*;
use crate::graph::{disjoint_union, make_bar_k, make_complete, make_cycle, random_graph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Assigns every host vertex to one of the `H` vertices or to nobody and
/// checks the branch-set conditions directly.
fn naive_has_minor(g: &Graph, h: &Graph) -> bool {
    let (n, k) = (g.v(), h.v());
    let mut label = vec![0usize; n];
    loop {
        let mut sets: BTreeMap<Vertex, BTreeSet<Vertex>> = (0..k).map(|u| (u, BTreeSet::new())).collect();
        for (v, &l) in label.iter().enumerate() {
            if l < k {
                sets.get_mut(&l).unwrap().insert(v);
            }
        }
        if validate_embedding(g, h, &MinorEmbedding { branch_sets: sets }).is_ok() {
            return true;
        }
        // next label vector in base k+1
        let mut i = 0;
        loop {
            if i == n {
                return k == 0;
            }
            label[i] += 1;
            if label[i] <= k {
                break;
            }
            label[i] = 0;
            i += 1;
        }
    }
}

fn contains(g: &Graph, h: &Graph) -> bool {
    match has_minor(g, h).unwrap() {
        Some(emb) => {
            validate_embedding(g, h, &emb).unwrap();
            true
        }
        None => false,
    }
}

fn c(k: usize) -> Graph {
    make_cycle(k).unwrap()
}

fn k(t: usize) -> Graph {
    make_complete(t).unwrap()
}

fn two_triangles() -> Graph {
    disjoint_union(&[c(3), c(3)])
}

#[test]
fn triangle_in_k4() {
    assert!(contains(&k(4), &c(3)));
}

#[test]
fn star_has_no_triangle() {
    assert!(!contains(&make_bar_k(1, 5).unwrap(), &c(3)));
}

#[test]
fn small_cover_blocks_two_triangles() {
    assert!(!contains(&make_bar_k(3, 8).unwrap(), &two_triangles()));
    assert!(!contains(&make_bar_k(3, 5).unwrap(), &two_triangles()));
    assert!(contains(&make_bar_k(4, 8).unwrap(), &two_triangles()));
}

#[test]
fn contraction_is_needed() {
    // C6 has C3 and C5 as minors but neither as a subgraph
    assert!(contains(&c(6), &c(3)));
    assert!(contains(&c(6), &c(5)));
    assert!(!contains(&c(5), &c(6)));
    // the Petersen graph has a K5 minor
    let mut edges = vec![];
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    let petersen = Graph::from_edges(10, edges).unwrap();
    assert!(contains(&petersen, &k(5)));
    assert!(!contains(&petersen, &k(6)));
}

#[test]
fn null_and_oversized_patterns() {
    assert_eq!(has_minor(&k(3), &Graph::null()).unwrap().unwrap().branch_sets.len(), 0);
    assert!(!contains(&k(3), &k(4)));
    assert!(contains(&Graph::empty(3), &Graph::empty(2)));
    assert!(!contains(&Graph::empty(3), &k(2)));
}

#[test]
fn budget_is_a_hard_error() {
    assert!(matches!(
        has_minor(&Graph::empty(15), &c(6)),
        Err(GraphError::BudgetExceeded { n: 15, budget: 14 })
    ));
    assert!(has_minor(&Graph::empty(20), &c(5)).is_ok());
    assert!(has_minor(&Graph::empty(21), &c(5)).is_err());
    let wide = MinorBudget { max_host: 16, ..MinorBudget::default() };
    assert!(has_minor_with(&Graph::empty(15), &c(6), &wide).is_ok());
}

#[test]
fn embedding_json_is_a_vertex_map() {
    let emb = has_minor(&c(6), &c(3)).unwrap().unwrap();
    let json = serde_json::to_value(&emb).unwrap();
    let obj = json.as_object().unwrap();
    assert_eq!(obj.keys().cloned().collect::<Vec<_>>(), vec!["0", "1", "2"]);
    let covered: usize = obj.values().map(|v| v.as_array().unwrap().len()).sum();
    assert_eq!(covered, 6);
    let back: MinorEmbedding = serde_json::from_value(json).unwrap();
    assert_eq!(back, emb);
}

#[test]
fn validator_rejects_bad_models() {
    let g = c(6);
    let h = c(3);
    let mk = |sets: &[&[usize]]| MinorEmbedding {
        branch_sets: sets.iter().enumerate().map(|(u, s)| (u, s.iter().copied().collect())).collect(),
    };
    assert!(validate_embedding(&g, &h, &mk(&[&[0, 1], &[2, 3], &[4, 5]])).is_ok());
    assert!(validate_embedding(&g, &h, &mk(&[&[0, 2], &[1], &[3, 4, 5]])).is_err());
    assert!(validate_embedding(&g, &h, &mk(&[&[0, 1], &[1, 2], &[3, 4, 5]])).is_err());
    assert!(validate_embedding(&g, &h, &mk(&[&[0], &[1], &[2]])).is_err());
    assert!(validate_embedding(&g, &h, &mk(&[&[0, 1], &[2, 3]])).is_err());
    assert!(validate_embedding(&g, &h, &mk(&[&[0, 1], &[2, 3], &[]])).is_err());
}

#[test]
fn cycle_oracle_examples() {
    let path = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    assert_eq!(circumference(&path).unwrap(), 0);
    assert_eq!(circumference(&c(6)).unwrap(), 6);
    assert_eq!(circumference(&k(5)).unwrap(), 5);
    assert_eq!(circumference(&Graph::null()).unwrap(), 0);
    assert_eq!(max_disjoint_cycles(&path).unwrap(), 0);
    assert_eq!(max_disjoint_cycles(&two_triangles()).unwrap(), 2);
    assert_eq!(max_disjoint_cycles(&k(6)).unwrap(), 2);
    assert_eq!(max_disjoint_cycles(&k(9)).unwrap(), 3);
    assert!(circumference(&Graph::empty(15)).is_err());
    assert!(max_disjoint_cycles(&Graph::empty(15)).is_err());
}

#[test]
fn agrees_with_naive_assignment() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let patterns = [c(3), c(4), k(4), two_triangles(), Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap(), make_bar_k(1, 4).unwrap()];
    for _ in 0..150 {
        let n = rng.gen_range(3..=7);
        let m = rng.gen_range(0..=n * (n - 1) / 2);
        let g = random_graph(n, m, &mut rng).unwrap();
        for h in &patterns {
            if h.v() <= n && (n <= 6 || h.v() <= 4) {
                assert_eq!(contains(&g, h), naive_has_minor(&g, h), "g = {g:?}, h = {h:?}");
            }
        }
    }
}

#[test]
fn twin_heavy_hosts_agree_with_naive() {
    // several false-twin classes, including ones the search places late
    let g = Graph::from_edges(7, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (0, 1), (5, 2), (6, 2), (5, 3), (6, 3)]).unwrap();
    for h in [c(3), c(4), c(5), k(4), two_triangles(), make_bar_k(2, 5).unwrap()] {
        if h.v() <= 6 {
            assert_eq!(contains(&g, &h), naive_has_minor(&g, &h), "h = {h:?}");
        }
    }
}

#[test]
fn cycle_equivalence_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let n = rng.gen_range(3..=8);
        let m = rng.gen_range(0..=n * (n - 1) / 2);
        let g = random_graph(n, m, &mut rng).unwrap();
        let circ = circumference(&g).unwrap();
        for len in 3..=8 {
            assert_eq!(circ >= len, contains(&g, &c(len)), "g = {g:?}, k = {len}");
        }
    }
}

#[test]
fn disjoint_cycle_equivalence_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let one = c(3);
    let two = two_triangles();
    for _ in 0..200 {
        let n = rng.gen_range(3..=9);
        let m = rng.gen_range(0..=n * (n - 1) / 2);
        let g = random_graph(n, m, &mut rng).unwrap();
        let cycles = max_disjoint_cycles(&g).unwrap();
        assert_eq!(cycles >= 1, contains(&g, &one));
        assert_eq!(cycles >= 2, contains(&g, &two), "g = {g:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adding_an_edge_keeps_a_minor(seed in any::<u64>(), n in 4usize..=8, pick in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(0..n * (n - 1) / 2);
        let g = random_graph(n, m, &mut rng).unwrap();
        let h = [c(3), c(4), k(4), two_triangles()][pick].clone();
        if contains(&g, &h) {
            let missing: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
            let (u, v) = missing[rng.gen_range(0..missing.len())];
            prop_assert!(contains(&g.with_edge(u, v), &h));
        }
    }

    #[test]
    fn subgraphs_are_minors(seed in any::<u64>(), n in 3usize..=9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = rng.gen_range(0..=n * (n - 1) / 2);
        let g = random_graph(n, m, &mut rng).unwrap();
        let keep: BTreeSet<_> = (0..n).filter(|_| rng.gen_bool(0.7)).collect();
        let (mut h, _) = g.induced_subgraph(&keep).unwrap();
        let edges: Vec<_> = h.edges().collect();
        for (u, v) in edges {
            if rng.gen_bool(0.3) {
                h = h.without_edge(u, v);
            }
        }
        prop_assert!(contains(&g, &h));
    }
}

#[test]
fn bar_k_hosts_agree_with_naive() {
    for t in 1..=3 {
        for n in t..=6 {
            let g = make_bar_k(t, n).unwrap();
            for h in [c(3), c(4), k(4), two_triangles()] {
                if h.v() <= n {
                    assert_eq!(contains(&g, &h), naive_has_minor(&g, &h), "t = {t}, n = {n}, h = {h:?}");
                }
            }
        }
    }
}
