//! Splits a dense graph into two vertex-disjoint dense pieces.
//!
//! Given `s, t ≥ 1` and a non-null `G` with `e(G) > (s+t+1)(v(G)−1)`, [`split`]
//! returns disjoint non-empty `V1`, `V2` with `e(G[V1]) > s(|V1|−1)` and
//! `e(G[V2]) > t(|V2|−1)`.
//!
//! The run has three phases:
//!
//! 1. start from the balanced constant point `(s+½)/(s+t+1)`;
//! 2. while two non-adjacent vertices are both fractional, move along a
//!    direction that does not decrease `f` or `g` until a coordinate hits
//!    0 or 1 (the support ends up a clique);
//! 3. round the clique with the adjusted potentials `f̄`, `ḡ`
//!    ([`clique_stage`]).
//!
//! Every step is recorded in a [`SplitTrace`] and the output is always
//! re-checked by [`verify_certificate`]. If a step the construction relies on
//! does not hold, the run stops with [`SplitError::InternalProofGap`] rather
//! than guessing.

mod clique;
mod direction;
mod trace;

pub use clique::{clique_fallback, clique_round_main, clique_stage};
pub use direction::{find_pair_direction, pair_direction_candidates, Pair};
pub use trace::{audit_trace, claim_four_issues, Branch, SplitTrace, Stage, TraceStep};

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::fractional::{
    f_partial, format_rational, fractional_support, g_partial, half, is_balanced, FracError, FracVector, Rational, SplitParams,
};
use crate::fractional::{f_potential, g_potential};
use crate::graph::{Graph, Vertex};

/// Largest graph for which the optional exhaustive fallback is attempted.
pub const EXHAUSTIVE_FALLBACK_MAX: usize = 16;

#[derive(Debug, Error)]
pub enum SplitError {
    #[error("the graph is null")]
    NullGraph,
    #[error("split parameters need s >= 1 and t >= 1")]
    InvalidParams,
    #[error("density hypothesis fails: e(G) = {edges} is not > (s+t+1)(v(G)-1) = {bound}")]
    PreconditionDensity { edges: usize, bound: String },
    #[error("internal proof gap: {reason}")]
    InternalProofGap { reason: String, trace: Box<SplitTrace> },
    #[error(transparent)]
    Frac(#[from] FracError),
}

#[derive(Debug, Clone, Default)]
pub struct SplitOptions {
    /// On an internal proof gap, try all 2-colourings of `V` (only for
    /// graphs with at most [`EXHAUSTIVE_FALLBACK_MAX`] vertices).
    pub fallback_exhaustive: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Densities {
    pub e1: usize,
    pub v1: usize,
    pub e2: usize,
    pub v2: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SplitResult {
    pub params: SplitParams,
    pub part1: BTreeSet<Vertex>,
    pub part2: BTreeSet<Vertex>,
    pub densities: Densities,
    pub certificate_ok: bool,
    /// Set when the parts came from the exhaustive search instead of the construction.
    pub exhaustive_fallback: bool,
    pub trace: SplitTrace,
}

impl SplitResult {
    /// `{params, steps[], result}` with rationals as `"p/q"` strings.
    pub fn trace_json(&self) -> serde_json::Value {
        json!({
            "params": self.params,
            "steps": self.trace.steps,
            "clique_state": self.trace.clique_state,
            "result": {
                "part1": self.part1,
                "part2": self.part2,
                "densities": self.densities,
                "certificate_ok": self.certificate_ok,
                "branch": self.trace.branch,
                "exhaustive_fallback": self.exhaustive_fallback,
            }
        })
    }
}

/// Same document shape as [`SplitResult::trace_json`] for a failed run.
pub fn failure_trace_json(params: &SplitParams, err: &SplitError) -> serde_json::Value {
    let (steps, state, branch) = match err {
        SplitError::InternalProofGap { trace, .. } => {
            (json!(trace.steps), json!(trace.clique_state), json!(trace.branch))
        }
        _ => (json!([]), json!(null), json!(null)),
    };
    json!({
        "params": params,
        "steps": steps,
        "clique_state": state,
        "result": { "error": err.to_string(), "branch": branch },
    })
}

pub fn split(g: &Graph, p: &SplitParams) -> Result<SplitResult, SplitError> {
    split_with(g, p, &SplitOptions::default())
}

pub fn split_with(g: &Graph, p: &SplitParams, opts: &SplitOptions) -> Result<SplitResult, SplitError> {
    check_hypothesis(g, p)?;
    let mut trace = SplitTrace::default();
    let outcome = run(g, p, &mut trace);
    let outcome = outcome.and_then(|(part1, part2)| {
        if verify_certificate(g, &part1, &part2, p) {
            Ok((part1, part2))
        } else {
            Err(gap("certificate check failed on the constructed parts", &trace))
        }
    });
    match outcome {
        Ok((part1, part2)) => Ok(finish(g, p, part1, part2, false, trace)),
        Err(SplitError::InternalProofGap { reason, trace })
            if opts.fallback_exhaustive && g.v() <= EXHAUSTIVE_FALLBACK_MAX =>
        {
            match exhaustive_split(g, p) {
                Some((part1, part2)) => Ok(finish(g, p, part1, part2, true, *trace)),
                None => Err(SplitError::InternalProofGap {
                    reason: format!("{reason}; exhaustive search found no split either"),
                    trace,
                }),
            }
        }
        Err(e) => Err(e),
    }
}

fn finish(
    g: &Graph,
    p: &SplitParams,
    part1: BTreeSet<Vertex>,
    part2: BTreeSet<Vertex>,
    exhaustive_fallback: bool,
    trace: SplitTrace,
) -> SplitResult {
    let densities = Densities {
        e1: g.edges_within(&part1),
        v1: part1.len(),
        e2: g.edges_within(&part2),
        v2: part2.len(),
    };
    SplitResult {
        params: p.clone(),
        certificate_ok: verify_certificate(g, &part1, &part2, p),
        part1,
        part2,
        densities,
        exhaustive_fallback,
        trace,
    }
}

fn run(g: &Graph, p: &SplitParams, trace: &mut SplitTrace) -> Result<(BTreeSet<Vertex>, BTreeSet<Vertex>), SplitError> {
    let x0 = init_balanced(g, p)?;
    trace.steps.push(TraceStep {
        stage: Stage::Init,
        touched: vec![],
        direction: vec![],
        step: Rational::zero(),
        potentials: vec![f_potential(g, &x0, p)?, g_potential(g, &x0, p)?],
        point: x0.clone(),
    });
    let y = round_off_clique_traced(g, x0, p, trace)?;
    clique::clique_stage_traced(g, &y, p, trace)
}

pub(crate) fn gap(reason: impl Into<String>, trace: &SplitTrace) -> SplitError {
    SplitError::InternalProofGap { reason: reason.into(), trace: Box::new(trace.clone()) }
}

fn check_hypothesis(g: &Graph, p: &SplitParams) -> Result<(), SplitError> {
    if g.is_null() {
        return Err(SplitError::NullGraph);
    }
    if p.s < Rational::one() || p.t < Rational::one() {
        return Err(SplitError::InvalidParams);
    }
    let bound = p.total() * Rational::from_integer(((g.v() - 1) as i64).into());
    if Rational::from_integer((g.e() as i64).into()) <= bound {
        return Err(SplitError::PreconditionDensity { edges: g.e(), bound: format_rational(&bound) });
    }
    Ok(())
}

/// The constant point `(s+½)/(s+t+1)`, checked to be balanced.
pub fn init_balanced(g: &Graph, p: &SplitParams) -> Result<FracVector, SplitError> {
    check_hypothesis(g, p)?;
    let value = (&p.s + half()) / p.total();
    let x = FracVector::constant(g.v(), value)?;
    let report = is_balanced(g, &x, p)?;
    if !report.balanced() {
        return Err(gap(
            format!("constant start point is not balanced: {:?}", report.failed()),
            &SplitTrace::default(),
        ));
    }
    Ok(x)
}

/// Largest `ε ≥ 0` keeping `x + ε·v` inside the box on the touched coordinates.
pub(crate) fn max_step(x: &FracVector, touched: &[Vertex], v: &[Rational]) -> Rational {
    touched
        .iter()
        .zip(v)
        .filter(|(_, d)| !d.is_zero())
        .map(|(&i, d)| {
            if d.is_positive() {
                (Rational::one() - x.get(i)) / d
            } else {
                x.get(i) / (-d)
            }
        })
        .min()
        .expect("direction is non-zero")
}

pub(crate) fn apply_step(x: &mut FracVector, touched: &[Vertex], v: &[Rational], eps: &Rational) -> Result<(), FracError> {
    for (&i, d) in touched.iter().zip(v) {
        let value = x.get(i) + eps * d;
        x.set(i, value)?;
    }
    Ok(())
}

/// Smallest non-adjacent pair (lexicographic) inside `set`.
fn first_non_adjacent_pair(g: &Graph, set: &BTreeSet<Vertex>) -> Option<(Vertex, Vertex)> {
    let vs: Vec<_> = set.iter().copied().collect();
    for (k, &i) in vs.iter().enumerate() {
        if let Some(&j) = vs[k + 1..].iter().find(|&&j| !g.has_edge(i, j)) {
            return Some((i, j));
        }
    }
    None
}

/// Moves a balanced point until its fractional support is a clique.
pub fn round_off_clique(g: &Graph, x: &FracVector, p: &SplitParams) -> Result<FracVector, SplitError> {
    let mut trace = SplitTrace::default();
    round_off_clique_traced(g, x.clone(), p, &mut trace)
}

fn round_off_clique_traced(
    g: &Graph,
    mut x: FracVector,
    p: &SplitParams,
    trace: &mut SplitTrace,
) -> Result<FracVector, SplitError> {
    x.check_host(g)?;
    let report = is_balanced(g, &x, p)?;
    if !report.balanced() {
        return Err(gap(format!("start point is not balanced: {:?}", report.failed()), trace));
    }
    let mut f = report.f_value;
    let mut gv = report.g_value;
    let mass_floor = &p.s + Rational::one();
    let comass_floor = &p.t + Rational::one();
    let mut mass = report.mass;
    while let Some((i, j)) = first_non_adjacent_pair(g, &fractional_support(&x)) {
        let a = (f_partial(g, &x, p, i), f_partial(g, &x, p, j));
        let b = (g_partial(g, &x, p, i), g_partial(g, &x, p, j));
        let v = find_pair_direction(&a, &b);
        let dir = [v.0.clone(), v.1.clone()];
        let eps = max_step(&x, &[i, j], &dir);
        apply_step(&mut x, &[i, j], &dir, &eps)?;
        // both functions are affine along the move, so the update is exact
        f += &eps * (&a.0 * &v.0 + &a.1 * &v.1);
        gv += &eps * (&b.0 * &v.0 + &b.1 * &v.1);
        mass += &eps * (&v.0 + &v.1);
        trace.steps.push(TraceStep {
            stage: Stage::PairMove,
            touched: vec![i, j],
            direction: dir.to_vec(),
            step: eps,
            potentials: vec![f.clone(), gv.clone()],
            point: x.clone(),
        });
        let comass = Rational::from_integer((g.v() as i64).into()) - &mass;
        let ok = f > p.f_floor() && gv > p.g_floor() && mass >= mass_floor && comass >= comass_floor;
        if !ok {
            return Err(gap(format!("balance lost after moving pair ({i}, {j})"), trace));
        }
    }
    Ok(x)
}

/// Exact check that `part1`, `part2` are disjoint, non-empty, and satisfy
/// `e(G[part1]) > s(|part1|−1)` and `e(G[part2]) > t(|part2|−1)`.
pub fn verify_certificate(g: &Graph, part1: &BTreeSet<Vertex>, part2: &BTreeSet<Vertex>, p: &SplitParams) -> bool {
    if part1.is_empty() || part2.is_empty() || !part1.is_disjoint(part2) {
        return false;
    }
    if part1.iter().chain(part2).any(|&v| v >= g.v()) {
        return false;
    }
    dense_enough(g, part1, &p.s) && dense_enough(g, part2, &p.t)
}

fn dense_enough(g: &Graph, part: &BTreeSet<Vertex>, weight: &Rational) -> bool {
    let e = Rational::from_integer((g.edges_within(part) as i64).into());
    let v = Rational::from_integer(((part.len() as i64) - 1).into());
    e > weight * v
}

/// First 2-colouring of `V` (by colour mask) whose classes pass the certificate.
pub fn exhaustive_split(g: &Graph, p: &SplitParams) -> Option<(BTreeSet<Vertex>, BTreeSet<Vertex>)> {
    let n = g.v();
    if n < 2 || n > 24 {
        return None;
    }
    (1u32..(1u32 << n) - 1).find_map(|mask| {
        let part1: BTreeSet<_> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let part2: BTreeSet<_> = (0..n).filter(|&i| mask >> i & 1 == 0).collect();
        verify_certificate(g, &part1, &part2, p).then_some((part1, part2))
    })
}
