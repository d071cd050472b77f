//! Randomized desk checks of the long-cycle and disjoint-cycle theorems.
//!
//! Graphs are uniform over labelled graphs with a given edge count; the edge
//! count is uniform over the range strictly above the theorem's threshold.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::fractional::{format_rational, Rational};
use crate::graph::{random_graph, Graph, GraphError};
use crate::minor::{circumference, max_disjoint_cycles, CYCLE_BUDGET};

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub n: usize,
    pub k: usize,
    pub edges: usize,
    pub threshold: String,
    /// Circumference or number of disjoint cycles found.
    pub observed: usize,
    pub graph: Graph,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub seed: u64,
    pub trials: usize,
    pub passed: usize,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty() && self.passed == self.trials
    }
}

fn int(v: usize) -> Rational {
    Rational::from_integer((v as i64).into())
}

/// Smallest integer strictly above `x` (for `x ≥ 0`).
fn above(x: &Rational) -> usize {
    let f = x.floor().to_integer();
    usize::try_from(f).expect("non-negative threshold") + 1
}

/// For each trial: `n ∈ [3, n_max]`, `k ∈ [3, min(7, n)]`, and
/// `e > (k−1)(n−1)/2`; asserts a cycle of length at least `k`.
pub fn check_erdos_gallai(n_max: usize, trials: usize, seed: u64) -> Result<CheckReport, GraphError> {
    if !(3..=CYCLE_BUDGET).contains(&n_max) {
        return Err(GraphError::BudgetExceeded { n: n_max, budget: CYCLE_BUDGET });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CheckReport { name: "erdos_gallai".into(), seed, trials, passed: 0, violations: vec![] };
    for _ in 0..trials {
        let n = rng.gen_range(3..=n_max);
        let k = rng.gen_range(3..=n.min(7));
        let threshold = int((k - 1) * (n - 1)) / int(2);
        let m = rng.gen_range(above(&threshold)..=n * (n - 1) / 2);
        let g = random_graph(n, m, &mut rng)?;
        let circ = circumference(&g)?;
        if circ >= k {
            report.passed += 1;
        } else {
            report.violations.push(Violation { n, k, edges: m, threshold: format_rational(&threshold), observed: circ, graph: g });
        }
    }
    Ok(report)
}

/// `max{(2k−1)(n−k), n − (3k−1)(3k−4)/2}`.
pub fn dirac_justesen_threshold(n: usize, k: usize) -> Rational {
    let a = int((2 * k - 1) * (n - k));
    let b = int(n) - int((3 * k - 1) * (3 * k - 4)) / int(2);
    a.max(b)
}

/// For each trial: `n ∈ [6, n_max]` and `e` above the threshold at `k = 2`;
/// asserts two vertex-disjoint cycles.
pub fn check_dirac_justesen(n_max: usize, trials: usize, seed: u64) -> Result<CheckReport, GraphError> {
    const K: usize = 2;
    if !(3 * K..=CYCLE_BUDGET).contains(&n_max) {
        return Err(GraphError::BudgetExceeded { n: n_max, budget: CYCLE_BUDGET });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = CheckReport { name: "dirac_justesen".into(), seed, trials, passed: 0, violations: vec![] };
    for _ in 0..trials {
        let n = rng.gen_range(3 * K..=n_max);
        let threshold = dirac_justesen_threshold(n, K);
        let m = rng.gen_range(above(&threshold)..=n * (n - 1) / 2);
        let g = random_graph(n, m, &mut rng)?;
        let cycles = max_disjoint_cycles(&g)?;
        if cycles >= K {
            report.passed += 1;
        } else {
            report.violations.push(Violation { n, k: K, edges: m, threshold: format_rational(&threshold), observed: cycles, graph: g });
        }
    }
    Ok(report)
}
