//! Rounding a balanced point whose fractional support `C` is a clique.
//!
//! The state `(A, B, C, q, r)` is frozen on entry. If `r ≤ 2s` and
//! `c−r−1 ≤ 2t` the main rounding runs: pairwise moves inside `C` that do
//! not decrease `f̄` or `ḡ` until at most one coordinate is fractional, then
//! that coordinate goes to 0 if it is at most ½ and to 1 otherwise.
//!
//! Otherwise one side of the clique is large enough to be a part on its own.
//! With `c−r−1 > 2t` the fallback pushes `f̄` up while not increasing
//! `Σ_C z`; the vertices of `C` left at 0 form a clique on more than `2t`
//! vertices. The case `r > 2s` is the same run on `1 − y` with `s` and `t`
//! exchanged. When both hold the `t`-side is taken.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::{
    apply_step, finish, gap, max_step, pair_direction_candidates, verify_certificate, Branch,
    SplitError, SplitResult, SplitTrace, Stage, TraceStep,
};
use crate::fractional::{
    fbar_partial, fbar_potential, fractional_support, gbar_partial, gbar_potential, half, int,
    CliqueRoundState, FracVector, Rational, SplitParams,
};
use crate::graph::{Graph, Vertex};

type Parts = (BTreeSet<Vertex>, BTreeSet<Vertex>);

/// Runs the clique stage on a balanced `y` with clique support.
pub fn clique_stage(g: &Graph, y: &FracVector, p: &SplitParams) -> Result<SplitResult, SplitError> {
    let mut trace = SplitTrace::default();
    let parts = clique_stage_traced(g, y, p, &mut trace)?;
    certified(g, p, parts, trace)
}

/// The main rounding. Requires `r ≤ 2s` and `c−r−1 ≤ 2t`.
pub fn clique_round_main(
    g: &Graph,
    y: &FracVector,
    state: &CliqueRoundState,
    p: &SplitParams,
) -> Result<SplitResult, SplitError> {
    let mut trace = SplitTrace::default();
    let parts = enter(g, y, state, p, &mut trace).and_then(|_| {
        if !within_main_bounds(state, p) {
            return Err(gap("main rounding needs r <= 2s and c-r-1 <= 2t", &trace));
        }
        trace.branch = Some(Branch::Main);
        main_traced(g, y, state, p, &mut trace)
    })?;
    certified(g, p, parts, trace)
}

/// The large-clique rounding. Requires `c−r−1 > 2t` or `r > 2s`.
pub fn clique_fallback(
    g: &Graph,
    y: &FracVector,
    state: &CliqueRoundState,
    p: &SplitParams,
) -> Result<SplitResult, SplitError> {
    let mut trace = SplitTrace::default();
    let parts = enter(g, y, state, p, &mut trace).and_then(|_| {
        let branch = fallback_side(state, p)
            .ok_or_else(|| gap("fallback needs c-r-1 > 2t or r > 2s", &trace))?;
        trace.branch = Some(branch);
        fallback_traced(g, y, state, p, branch == Branch::FallbackS, &mut trace)
    })?;
    certified(g, p, parts, trace)
}

fn certified(g: &Graph, p: &SplitParams, (part1, part2): Parts, trace: SplitTrace) -> Result<SplitResult, SplitError> {
    if !verify_certificate(g, &part1, &part2, p) {
        return Err(gap("certificate check failed on the constructed parts", &trace));
    }
    Ok(finish(g, p, part1, part2, false, trace))
}

fn ri(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn within_main_bounds(state: &CliqueRoundState, p: &SplitParams) -> bool {
    ri(state.r) <= int(2) * &p.s && ri(state.co_r()) <= int(2) * &p.t
}

/// `t`-side first when both predicates hold.
fn fallback_side(state: &CliqueRoundState, p: &SplitParams) -> Option<Branch> {
    if ri(state.co_r()) > int(2) * &p.t {
        Some(Branch::FallbackT)
    } else if ri(state.r) > int(2) * &p.s {
        Some(Branch::FallbackS)
    } else {
        None
    }
}

pub(super) fn clique_stage_traced(
    g: &Graph,
    y: &FracVector,
    p: &SplitParams,
    trace: &mut SplitTrace,
) -> Result<Parts, SplitError> {
    let state = CliqueRoundState::from_point(g, y)
        .map_err(|e| gap(format!("clique stage entered with {e}"), trace))?;
    enter(g, y, &state, p, trace)?;
    match fallback_side(&state, p) {
        None => {
            trace.branch = Some(Branch::Main);
            main_traced(g, y, &state, p, trace)
        }
        Some(branch) => {
            trace.branch = Some(branch);
            fallback_traced(g, y, &state, p, branch == Branch::FallbackS, trace)
        }
    }
}

fn adjusted(g: &Graph, z: &FracVector, state: &CliqueRoundState, p: &SplitParams) -> Result<Vec<Rational>, SplitError> {
    Ok(vec![fbar_potential(g, z, state, p)?, gbar_potential(g, z, state, p)?])
}

/// Records the entry point and checks the entry bounds on `f̄(y)`, `ḡ(y)`.
fn enter(
    g: &Graph,
    y: &FracVector,
    state: &CliqueRoundState,
    p: &SplitParams,
    trace: &mut SplitTrace,
) -> Result<(), SplitError> {
    let fresh = CliqueRoundState::from_point(g, y)?;
    if &fresh != state {
        return Err(gap("clique state does not match the entry point", trace));
    }
    trace.clique_state = Some(state.clone());
    trace.steps.push(TraceStep {
        stage: Stage::CliqueEnter,
        touched: vec![],
        direction: vec![],
        step: Rational::zero(),
        potentials: adjusted(g, y, state, p)?,
        point: y.clone(),
    });
    let issues = super::claim_four_issues(g, p, state, y);
    if !issues.is_empty() {
        return Err(gap(issues.join("; "), trace));
    }
    Ok(())
}

fn main_traced(
    g: &Graph,
    y: &FracVector,
    state: &CliqueRoundState,
    p: &SplitParams,
    trace: &mut SplitTrace,
) -> Result<Parts, SplitError> {
    let one = Rational::one();
    let mut z = y.clone();
    loop {
        let fr: Vec<_> = fractional_support(&z).into_iter().collect();
        if fr.len() <= 1 {
            break;
        }
        let (i, j) = (fr[0], fr[1]);
        let a = (fbar_partial(g, &z, state, p, i), fbar_partial(g, &z, state, p, j));
        let b = (gbar_partial(g, &z, state, p, i), gbar_partial(g, &z, state, p, j));
        let mass = z.mass();
        let n = ri(g.v() as i64);
        // a move is taken to the box boundary; it must keep |z| > 1 and |1−z| > 1
        let chosen = pair_direction_candidates(&a, &b).into_iter().find_map(|v| {
            let dir = [v.0, v.1];
            let eps = max_step(&z, &[i, j], &dir);
            let new_mass = &mass + &eps * (&dir[0] + &dir[1]);
            (new_mass > one && &n - &new_mass > one).then_some((dir, eps))
        });
        let Some((dir, eps)) = chosen else {
            return Err(gap(
                format!("no admissible clique move on ({i}, {j}) keeps |z| > 1 and |1-z| > 1"),
                trace,
            ));
        };
        apply_step(&mut z, &[i, j], &dir, &eps)?;
        trace.steps.push(TraceStep {
            stage: Stage::CliqueMove,
            touched: vec![i, j],
            direction: dir.to_vec(),
            step: eps,
            potentials: adjusted(g, &z, state, p)?,
            point: z.clone(),
        });
    }
    if let Some(i) = fractional_support(&z).into_iter().next() {
        // ties go down
        let (target, dir) = if z.get(i) <= &half() { (int(0), int(-1)) } else { (int(1), int(1)) };
        let eps = (&target - z.get(i)) * &dir;
        z.set(i, target)?;
        trace.steps.push(TraceStep {
            stage: Stage::FinalRound,
            touched: vec![i],
            direction: vec![dir],
            step: eps,
            potentials: adjusted(g, &z, state, p)?,
            point: z.clone(),
        });
    }
    let fbar = fbar_potential(g, &z, state, p)?;
    let gbar = gbar_potential(g, &z, state, p)?;
    if fbar <= -p.s.clone() {
        return Err(gap("after rounding f̄(z*) <= -s", trace));
    }
    if gbar <= -p.t.clone() {
        return Err(gap("after rounding ḡ(z*) <= -t", trace));
    }
    let ones: BTreeSet<_> = (0..g.v()).filter(|&i| z.get(i).is_one()).collect();
    let zeros: BTreeSet<_> = (0..g.v()).filter(|&i| z.get(i).is_zero()).collect();
    if ones.is_empty() || zeros.is_empty() {
        return Err(gap("main rounding produced an empty side", trace));
    }
    Ok((ones, zeros))
}

fn fallback_traced(
    g: &Graph,
    y: &FracVector,
    state: &CliqueRoundState,
    p: &SplitParams,
    mirrored: bool,
    trace: &mut SplitTrace,
) -> Result<Parts, SplitError> {
    let (mut z, st, pw) = if mirrored {
        (y.complement(), state.mirrored(), p.swapped())
    } else {
        (y.clone(), state.clone(), p.clone())
    };
    let sign = if mirrored { int(-1) } else { int(1) };
    let to_orig = |w: &FracVector| if mirrored { w.complement() } else { w.clone() };
    let minus_one = int(-1);
    loop {
        let fr: Vec<_> = fractional_support(&z).into_iter().collect();
        if fr.len() <= 1 {
            break;
        }
        let (i, j) = (fr[0], fr[1]);
        let a = (fbar_partial(g, &z, &st, &pw, i), fbar_partial(g, &z, &st, &pw, j));
        // second objective: −Σ_C z, which must not decrease
        let b = (minus_one.clone(), minus_one.clone());
        let v = super::find_pair_direction(&a, &b);
        let dir = [v.0, v.1];
        let eps = max_step(&z, &[i, j], &dir);
        apply_step(&mut z, &[i, j], &dir, &eps)?;
        let orig = to_orig(&z);
        trace.steps.push(TraceStep {
            stage: Stage::Fallback,
            touched: vec![i, j],
            direction: dir.iter().map(|d| d * &sign).collect(),
            step: eps,
            potentials: adjusted(g, &orig, state, p)?,
            point: orig,
        });
    }
    if let Some(i) = fractional_support(&z).into_iter().next() {
        // k = r + |N(i) ∩ A| − s is the coefficient of z_i in f̄
        let k = fbar_partial(g, &z, &st, &pw, i);
        let (target, dir) = if k >= Rational::zero() { (int(1), int(1)) } else { (int(0), int(-1)) };
        let eps = (&target - z.get(i)) * &dir;
        z.set(i, target)?;
        let orig = to_orig(&z);
        trace.steps.push(TraceStep {
            stage: Stage::Fallback,
            touched: vec![i],
            direction: vec![dir * &sign],
            step: eps,
            potentials: adjusted(g, &orig, state, p)?,
            point: orig,
        });
    }
    let clique_mass = z.sum_over(&st.c_set);
    if clique_mass > st.q.ceil() {
        return Err(gap("fallback raised the clique mass above its ceiling", trace));
    }
    let ones: BTreeSet<_> = (0..g.v()).filter(|&i| z.get(i).is_one()).collect();
    let zero_side: BTreeSet<_> = st.c_set.iter().copied().filter(|&i| z.get(i).is_zero()).collect();
    if ones.is_empty() {
        return Err(gap("fallback left no vertex at 1; the dense side would be null", trace));
    }
    if ri(zero_side.len() as i64) <= int(2) * &pw.t {
        return Err(gap("zero side of the clique is too small", trace));
    }
    Ok(if mirrored { (zero_side, ones) } else { (ones, zero_side) })
}
