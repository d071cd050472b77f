//! Search for graphs with `e(G) ≥ (s+t+1)v(G)` that admit no spanning split
//! into `A ∪ B = V` with `e(G[A]) ≥ s|A|` and `e(G[B]) ≥ t|B|`.
//!
//! Having such a split survives adding edges, so for each `n` only graphs
//! with exactly `⌈(s+t+1)n⌉` edges need checking: every denser graph
//! contains one of them as a spanning subgraph.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::classes_with_edges;
use crate::fractional::{serde_rational, Rational};
use crate::graph::{random_graph, Graph, GraphError, Vertex};

/// Largest `n` the probe accepts.
pub const PROBE_MAX: usize = 10;

#[derive(Debug, Clone)]
pub struct ProbeConfig {
    pub n_max: usize,
    pub s: Rational,
    pub t: Rational,
    /// Up to this `n` every isomorphism class is checked; above it, samples.
    pub exhaustive_max: usize,
    pub samples: usize,
    pub seed: u64,
}

impl ProbeConfig {
    pub fn new(n_max: usize, s: Rational, t: Rational) -> ProbeConfig {
        ProbeConfig { n_max, s, t, exhaustive_max: 8, samples: 200, seed: 0 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeRow {
    pub n: usize,
    pub edges: usize,
    pub exhaustive: bool,
    pub graphs: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    #[serde(with = "serde_rational")]
    pub s: Rational,
    #[serde(with = "serde_rational")]
    pub t: Rational,
    pub seed: u64,
    pub rows: Vec<ProbeRow>,
    pub graphs_checked: usize,
    pub counterexamples: Vec<Graph>,
}

impl ProbeReport {
    pub fn ok(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

fn dense(g: &Graph, part: &BTreeSet<Vertex>, weight: &Rational) -> bool {
    Rational::from_integer((g.edges_within(part) as i64).into()) >= weight * Rational::from_integer((part.len() as i64).into())
}

/// First spanning split (by colour mask) with both parts non-empty.
pub fn spanning_split(g: &Graph, s: &Rational, t: &Rational) -> Option<(BTreeSet<Vertex>, BTreeSet<Vertex>)> {
    let n = g.v();
    assert!(n <= 20, "spanning split search is exponential in n");
    if n < 2 {
        return None;
    }
    (1u32..(1 << n) - 1).find_map(|mask| {
        let a: BTreeSet<_> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let b: BTreeSet<_> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
        (dense(g, &a, s) && dense(g, &b, t)).then_some((a, b))
    })
}

pub fn probe_partition_conjecture(cfg: &ProbeConfig) -> Result<ProbeReport, GraphError> {
    let (s, t) = (cfg.s.clone(), cfg.t.clone());
    probe_with(cfg, move |g| spanning_split(g, &s, &t).is_some())
}

/// Runs the probe with an arbitrary "this graph splits" predicate.
pub fn probe_with<F>(cfg: &ProbeConfig, splits: F) -> Result<ProbeReport, GraphError>
where
    F: Fn(&Graph) -> bool + Sync,
{
    if cfg.n_max > PROBE_MAX {
        return Err(GraphError::BudgetExceeded { n: cfg.n_max, budget: PROBE_MAX });
    }
    let zero = Rational::from_integer(0.into());
    if cfg.s < zero || cfg.t < zero {
        return Err(GraphError::InvalidFamily("s and t must be non-negative".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let weight = &cfg.s + &cfg.t + Rational::from_integer(1.into());
    let mut report = ProbeReport {
        s: cfg.s.clone(),
        t: cfg.t.clone(),
        seed: cfg.seed,
        rows: vec![],
        graphs_checked: 0,
        counterexamples: vec![],
    };
    for n in 1..=cfg.n_max {
        let need = (&weight * Rational::from_integer((n as i64).into())).ceil().to_integer();
        let edges = usize::try_from(need).expect("positive");
        if edges > n * (n - 1) / 2 {
            continue;
        }
        let exhaustive = n <= cfg.exhaustive_max;
        let graphs = if exhaustive {
            classes_with_edges(n, edges)?
        } else {
            (0..cfg.samples).map(|_| random_graph(n, edges, &mut rng)).collect::<Result<_, _>>()?
        };
        let failures: Vec<Graph> = graphs.par_iter().filter(|g| !splits(g)).cloned().collect();
        report.rows.push(ProbeRow { n, edges, exhaustive, graphs: graphs.len() });
        report.graphs_checked += graphs.len();
        report.counterexamples.extend(failures);
    }
    Ok(report)
}
