//! Exhaustive extremal numbers, lower-bound constructions and desk checks.
//!
//! `ex_m(n, H)` is the largest edge count of an `n`-vertex graph with no `H`
//! minor. Minor-freeness is closed under deleting edges, so the minor-free
//! isomorphism classes can be grown one edge at a time from the empty graph.

mod canon;
mod checks;
mod enumerate;
mod ledger;
mod probe;

pub use canon::{canonical_form, canonical_key, CANON_MAX};
pub use checks::{check_dirac_justesen, check_erdos_gallai, dirac_justesen_threshold, CheckReport, Violation};
pub use enumerate::{classes_with_edges, levels, next_level, Level};
pub use ledger::{Ledger, LedgerError, LedgerOutcome};
pub use probe::{probe_partition_conjecture, probe_with, spanning_split, ProbeConfig, ProbeReport, ProbeRow};

use std::time::Instant;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::fractional::{serde_rational, Rational};
use crate::graph::{disjoint_union, make_bar_k, Graph, GraphError, GraphFamilySpec};
use crate::minor::{has_minor, MinorBudget};

/// Largest `n` for [`ex_minor`].
pub const EX_BUDGET: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalRecord {
    pub n: usize,
    pub h_spec: GraphFamilySpec,
    /// Canonical code of the pattern; the ledger key together with `n`.
    pub h_key: String,
    pub ex_value: usize,
    pub witness: Graph,
    pub runtime_ms: u64,
}

fn ratio(a: usize, b: usize) -> Rational {
    Rational::new((a as i64).into(), (b as i64).into())
}

fn minor_free(g: &Graph, h: &Graph) -> bool {
    matches!(has_minor(g, h), Ok(None))
}

/// `ex_m(n, h)` with a witness, for any pattern graph.
pub fn ex_minor_graph(n: usize, h: &Graph) -> Result<(usize, Graph), GraphError> {
    if n > EX_BUDGET {
        return Err(GraphError::BudgetExceeded { n, budget: EX_BUDGET });
    }
    let lv = levels(n, usize::MAX, |g| minor_free(g, h))?;
    let top = lv
        .last()
        .ok_or_else(|| GraphError::InvalidFamily(format!("every graph on {n} vertices has this minor")))?;
    Ok((lv.len() - 1, top[0].1.clone()))
}

pub fn ex_minor(n: usize, h_spec: &GraphFamilySpec) -> Result<ExtremalRecord, GraphError> {
    let start = Instant::now();
    let h = h_spec.build()?;
    let (ex_value, witness) = ex_minor_graph(n, &h)?;
    Ok(ExtremalRecord {
        n,
        h_spec: h_spec.clone(),
        h_key: canonical_key(&h)?,
        ex_value,
        witness,
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

/// Re-checks a record: the witness has `n` vertices and `ex_value` edges,
/// has no `h` minor, and every one-edge extension has one.
pub fn validate_record(rec: &ExtremalRecord) -> Result<(), String> {
    let h = rec.h_spec.build().map_err(|e| e.to_string())?;
    let key = canonical_key(&h).map_err(|e| e.to_string())?;
    if key != rec.h_key {
        return Err(format!("pattern key {} does not match {}", rec.h_key, key));
    }
    let w = &rec.witness;
    if w.v() != rec.n || w.e() != rec.ex_value {
        return Err(format!("witness has {} vertices and {} edges", w.v(), w.e()));
    }
    if !minor_free(w, &h) {
        return Err("witness contains the pattern as a minor".into());
    }
    for u in 0..w.v() {
        for v in u + 1..w.v() {
            if !w.has_edge(u, v) && minor_free(&w.with_edge(u, v), &h) {
                return Err(format!("adding {u}-{v} keeps the witness minor-free"));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct LowerBoundRow {
    pub n: usize,
    pub edges: usize,
    pub formula_edges: usize,
    #[serde(with = "serde_rational")]
    pub density: Rational,
    /// Oracle verdict that the construction has no `h` minor; `None` past the budget.
    pub minor_free: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LowerBoundReport {
    pub tau: usize,
    pub t: usize,
    #[serde(with = "serde_rational")]
    pub value: Rational,
    pub at_n: usize,
    pub rows: Vec<LowerBoundRow>,
}

impl LowerBoundReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| r.edges == r.formula_edges && r.minor_free != Some(false))
    }
}

/// Best density of `K̄_{τ−1, n−τ+1}` over `n ≤ n_max`, where `τ` is the
/// vertex cover number of `h`, with oracle checks that the construction is
/// `h`-minor-free wherever the oracle budget allows.
pub fn density_supremum_lower_bound(h: &Graph, n_max: usize) -> Result<LowerBoundReport, GraphError> {
    let tau = h.vertex_cover_number()?;
    let t = tau.saturating_sub(1);
    let limit = MinorBudget::default().limit_for(h);
    let mut rows = Vec::new();
    for n in t.max(1)..=n_max {
        let g = make_bar_k(t, n)?;
        let formula_edges = n * t - t * (t + 1) / 2;
        let minor_free = (n <= limit).then(|| minor_free(&g, h));
        rows.push(LowerBoundRow { n, edges: g.e(), formula_edges, density: ratio(g.e(), n), minor_free });
    }
    let (value, at_n) = rows
        .iter()
        .fold((Rational::zero(), 0), |best, r| if r.density > best.0 { (r.density.clone(), r.n) } else { best });
    Ok(LowerBoundReport { tau, t, value, at_n, rows })
}

/// Known extremal constants of 2-connected parts: `c(C_k) = (k−1)/2` from
/// the long-cycle theorem and `c(K_t) = t−2` for `3 ≤ t ≤ 9`.
pub fn known_extremal_constant(part: &Graph) -> Option<Rational> {
    let n = part.v();
    let connected = part.components().len() == 1;
    if n >= 3 && connected && part.e() == n && (0..n).all(|v| part.degree(v) == 2) {
        return Some(Rational::new((n as i64 - 1).into(), 2.into()));
    }
    if (3..=9).contains(&n) && part.e() == n * (n - 1) / 2 {
        return Some(Rational::from_integer((n as i64 - 2).into()));
    }
    None
}

#[derive(Debug, Clone, Serialize)]
pub struct UnionRow {
    pub n: usize,
    pub ex_value: usize,
    #[serde(with = "serde_rational")]
    pub ratio: Rational,
    pub within_upper: bool,
    /// Edges of `K̄_{τ−1, n−τ+1}` when it fits on `n` vertices.
    pub construction_edges: Option<usize>,
    pub construction_minor_free: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct UnionBoundReport {
    #[serde(with = "serde_rational")]
    pub upper_bound: Rational,
    #[serde(with = "serde_rational")]
    pub lower_bound: Rational,
    pub tight: bool,
    pub rows: Vec<UnionRow>,
}

impl UnionBoundReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| {
            r.within_upper
                && r.construction_minor_free != Some(false)
                && r.construction_edges.map_or(true, |e| e <= r.ex_value)
        })
    }
}

/// Checks `ex_m(n', H)/n' ≤ Σ c(H_i) + k − 1` for every `n' ≤ n`, and that
/// the `K̄_{τ−1, n'−τ+1}` construction is `H`-minor-free and no denser than
/// the extremal graph, where `H` is the disjoint union of `h_parts`.
pub fn verify_union_bound(h_parts: &[Graph], n: usize) -> Result<UnionBoundReport, GraphError> {
    if h_parts.is_empty() {
        return Err(GraphError::InvalidFamily("empty list of parts".into()));
    }
    let mut upper = Rational::from_integer((h_parts.len() as i64 - 1).into());
    for part in h_parts {
        upper += known_extremal_constant(part).ok_or_else(|| {
            GraphError::InvalidFamily(format!("no known extremal constant for {part:?}"))
        })?;
    }
    let h = disjoint_union(h_parts);
    let tau = h.vertex_cover_number()?;
    let t = tau.saturating_sub(1);
    let lower = Rational::from_integer((t as i64).into());
    let mut rows = Vec::new();
    for m in 1..=n {
        let (ex_value, _) = ex_minor_graph(m, &h)?;
        let r = ratio(ex_value, m);
        let construction = (t <= m).then(|| make_bar_k(t, m)).transpose()?;
        rows.push(UnionRow {
            n: m,
            ex_value,
            within_upper: r <= upper,
            ratio: r,
            construction_edges: construction.as_ref().map(Graph::e),
            construction_minor_free: construction.as_ref().map(|g| minor_free(g, &h)),
        });
    }
    Ok(UnionBoundReport { tight: lower == upper, upper_bound: upper, lower_bound: lower, rows })
}

#[cfg(test)]
mod tests;
