//! Audit trail of a split run and an independent checker for it.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::fractional::{
    f_potential, fbar_potential, fractional_support, g_potential, gbar_potential, half,
    is_balanced, serde_rational, serde_rational_vec, CliqueRoundState, FracVector, Rational,
    SplitParams,
};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Init,
    PairMove,
    CliqueEnter,
    CliqueMove,
    FinalRound,
    Fallback,
}

/// Which rounding the clique stage ran.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `r ≤ 2s` and `c−r−1 ≤ 2t`: pairwise moves inside the clique, then one rounding.
    Main,
    /// `c−r−1 > 2t`: the zero side of the clique becomes the `t`-part.
    FallbackT,
    /// `r > 2s` (and `c−r−1 ≤ 2t`): same as above on `1−y` with `s`, `t` exchanged.
    FallbackS,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub stage: Stage,
    /// One or two coordinates moved by this step; empty for `init` / `clique_enter`.
    pub touched: Vec<Vertex>,
    /// Direction on `touched`, in original coordinates.
    #[serde(with = "serde_rational_vec")]
    pub direction: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub step: Rational,
    /// `(f, g)` before the clique stage, `(f̄, ḡ)` from `clique_enter` on.
    #[serde(with = "serde_rational_vec")]
    pub potentials: Vec<Rational>,
    pub point: FracVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct SplitTrace {
    pub steps: Vec<TraceStep>,
    pub clique_state: Option<CliqueRoundState>,
    pub branch: Option<Branch>,
}

impl SplitTrace {
    pub fn last_point(&self) -> Option<&FracVector> {
        self.steps.last().map(|s| &s.point)
    }
}

/// Replays `trace` against `g` and reports every broken invariant:
///
/// * every point lies in `[0,1]^V` and has `v(g)` coordinates;
/// * each move changes exactly its touched coordinates by `step·direction`;
/// * recorded potentials match a fresh evaluation;
/// * `f`, `g` never decrease over pair moves and the point stays balanced;
/// * `f̄`, `ḡ` never decrease over clique moves; in the fallback `f̄` (or `ḡ`
///   on the mirrored side) never decreases;
/// * each move shrinks the fractional support;
/// * the run takes at most `2·v(g)` steps after `init`.
pub fn audit_trace(g: &Graph, p: &SplitParams, trace: &SplitTrace) -> Vec<String> {
    let mut issues = Vec::new();
    let n = g.v();
    if trace.steps.len() > 2 * n + 3 {
        issues.push(format!("{} steps exceed the 2n bound for n = {n}", trace.steps.len()));
    }
    if trace.steps.first().map(|s| s.stage) != Some(Stage::Init) {
        issues.push("trace does not start with init".into());
    }
    let mut prev: Option<&TraceStep> = None;
    for (k, step) in trace.steps.iter().enumerate() {
        let tag = format!("step {k} ({:?})", step.stage);
        if step.point.len() != n {
            issues.push(format!("{tag}: point has {} coordinates", step.point.len()));
            continue;
        }
        if let Some(bad) = step.point.entries().iter().position(|x| x < &Rational::zero() || x > &Rational::one()) {
            issues.push(format!("{tag}: coordinate {bad} outside [0,1]"));
        }
        let fresh = match step.stage {
            Stage::Init | Stage::PairMove => vec![
                f_potential(g, &step.point, p).expect("host checked"),
                g_potential(g, &step.point, p).expect("host checked"),
            ],
            _ => match &trace.clique_state {
                Some(st) => vec![
                    fbar_potential(g, &step.point, st, p).expect("host checked"),
                    gbar_potential(g, &step.point, st, p).expect("host checked"),
                ],
                None => {
                    issues.push(format!("{tag}: clique stage without a recorded state"));
                    continue;
                }
            },
        };
        if fresh != step.potentials {
            issues.push(format!("{tag}: recorded potentials differ from recomputation"));
        }
        if let Some(prev) = prev {
            if matches!(step.stage, Stage::PairMove | Stage::CliqueMove | Stage::FinalRound | Stage::Fallback) {
                check_move(prev, step, &tag, &mut issues);
            }
            let before = fractional_support(&prev.point).len();
            let after = fractional_support(&step.point).len();
            let is_move = !step.touched.is_empty();
            if is_move && after >= before {
                issues.push(format!("{tag}: fractional support did not shrink ({before} -> {after})"));
            }
            let same_kind = prev.stage == step.stage
                || (prev.stage == Stage::Init && step.stage == Stage::PairMove)
                || (prev.stage == Stage::CliqueEnter && matches!(step.stage, Stage::CliqueMove | Stage::Fallback));
            if same_kind {
                let watched: &[usize] = match (step.stage, trace.branch) {
                    (Stage::Fallback, Some(Branch::FallbackS)) => &[1],
                    (Stage::Fallback, _) => &[0],
                    _ => &[0, 1],
                };
                for &w in watched {
                    if step.potentials[w] < prev.potentials[w] {
                        issues.push(format!("{tag}: potential {w} decreased"));
                    }
                }
            }
        }
        if step.stage == Stage::PairMove {
            let report = is_balanced(g, &step.point, p).expect("host checked");
            if !report.balanced() {
                issues.push(format!("{tag}: not balanced ({:?})", report.failed()));
            }
        }
        if step.stage == Stage::CliqueEnter {
            if let Some(st) = &trace.clique_state {
                issues.extend(claim_four_issues(g, p, st, &step.point).into_iter().map(|m| format!("{tag}: {m}")));
            }
        }
        prev = Some(step);
    }
    issues
}

fn check_move(prev: &TraceStep, step: &TraceStep, tag: &str, issues: &mut Vec<String>) {
    if step.touched.len() != step.direction.len() || step.touched.is_empty() || step.touched.len() > 2 {
        issues.push(format!("{tag}: malformed move"));
        return;
    }
    let touched: BTreeSet<_> = step.touched.iter().copied().collect();
    for (i, (a, b)) in prev.point.entries().iter().zip(step.point.entries()).enumerate() {
        let expected = match step.touched.iter().position(|&t| t == i) {
            Some(k) => a + &step.step * &step.direction[k],
            None => a.clone(),
        };
        if &expected != b {
            let what = if touched.contains(&i) { "moved coordinate" } else { "untouched coordinate" };
            issues.push(format!("{tag}: {what} {i} does not match step·direction"));
        }
    }
}

/// Lower bounds on `f̄(y)` and `ḡ(y)` at clique entry:
/// `f̄(y) > a/2 + q²/(2c) − (s+½)²/(s+t+1)` and
/// `ḡ(y) > b/2 + (c−q)²/(2c) − (t+½)²/(s+t+1)` (the `1/c` terms vanish when `c = 0`).
pub fn claim_four_issues(g: &Graph, p: &SplitParams, st: &CliqueRoundState, y: &FracVector) -> Vec<String> {
    let mut out = Vec::new();
    let c = st.c();
    let two_c = Rational::from_integer((2 * c as i64).into());
    let quad = |v: &Rational| if c == 0 { Rational::zero() } else { v * v / &two_c };
    let a_half = Rational::from_integer((st.a() as i64).into()) * half();
    let b_half = Rational::from_integer((st.b() as i64).into()) * half();
    let co_q = Rational::from_integer((c as i64).into()) - &st.q;
    let f_bound = a_half + quad(&st.q) + p.f_floor();
    let g_bound = b_half + quad(&co_q) + p.g_floor();
    let fbar = fbar_potential(g, y, st, p).expect("host checked");
    let gbar = gbar_potential(g, y, st, p).expect("host checked");
    if fbar <= f_bound {
        out.push("f̄(y) is not above its entry bound".to_string());
    }
    if gbar <= g_bound {
        out.push("ḡ(y) is not above its entry bound".to_string());
    }
    out
}
