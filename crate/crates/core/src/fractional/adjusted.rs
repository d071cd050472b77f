//! Adjusted potentials for the clique stage.
//!
//! Once the fractional support `C` of the working point is a clique, `f` and
//! `g` are no longer affine in pairs of coordinates of `C`. The adjusted
//! potentials replace the clique's quadratic term by an affine bound:
//!
//! ```text
//! f̄(x) = r Σ_C x_i − r(r+1)/2 − Σ_{{i,j}⊆C} x_i x_j + e(x) − s|x|
//! ḡ(x) = (c−r−1) Σ_C (1−x_i) − (c−r)(c−r−1)/2
//!        − Σ_{{i,j}⊆C} (1−x_i)(1−x_j) + e(1−x) − t|1−x|
//! ```
//!
//! Since every pair in `C` is an edge, the `x_i x_j` terms cancel and both
//! functions are jointly affine on any two coordinates of `C`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{floor_int, is_integral, serde_rational, FracError, FracVector, Rational, SplitParams};
use crate::graph::{Graph, Vertex};

/// Bookkeeping frozen on entry to the clique stage: `A = {y_i = 1}`,
/// `B = {y_i = 0}`, `C = fr(y)`, `q = Σ_C y_i`, `r = ⌊q⌋`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueRoundState {
    pub a_set: BTreeSet<Vertex>,
    pub b_set: BTreeSet<Vertex>,
    pub c_set: BTreeSet<Vertex>,
    #[serde(with = "serde_rational")]
    pub q: Rational,
    pub r: i64,
}

impl CliqueRoundState {
    /// Reads the state off `y`. Fails unless `fr(y)` is a clique of `g`.
    pub fn from_point(g: &Graph, y: &FracVector) -> Result<Self, FracError> {
        y.check_host(g)?;
        let mut a_set = BTreeSet::new();
        let mut b_set = BTreeSet::new();
        let mut c_set = BTreeSet::new();
        for (i, v) in y.entries().iter().enumerate() {
            if v.is_one() {
                a_set.insert(i);
            } else if v.is_zero() {
                b_set.insert(i);
            } else {
                c_set.insert(i);
            }
        }
        let cs: Vec<_> = c_set.iter().copied().collect();
        for (k, &i) in cs.iter().enumerate() {
            if let Some(&j) = cs[k + 1..].iter().find(|&&j| !g.has_edge(i, j)) {
                return Err(FracError::InconsistentState(format!(
                    "fractional support is not a clique: {i} and {j} are not adjacent"
                )));
            }
        }
        let q = y.sum_over(&c_set);
        let r = floor_int(&q);
        Ok(CliqueRoundState { a_set, b_set, c_set, q, r })
    }

    pub fn a(&self) -> usize {
        self.a_set.len()
    }

    pub fn b(&self) -> usize {
        self.b_set.len()
    }

    pub fn c(&self) -> usize {
        self.c_set.len()
    }

    /// `c − r − 1`, the coefficient playing the role of `r` in `ḡ`.
    pub fn co_r(&self) -> i64 {
        self.c() as i64 - self.r - 1
    }

    /// The state seen from the complementary point `1 − y` with `s` and `t`
    /// exchanged: `A` and `B` swap, `q ↦ c − q` and `r ↦ c − r − 1`. Under
    /// this map `f̄` and `ḡ` trade places.
    pub fn mirrored(&self) -> CliqueRoundState {
        CliqueRoundState {
            a_set: self.b_set.clone(),
            b_set: self.a_set.clone(),
            c_set: self.c_set.clone(),
            q: Rational::from_integer((self.c() as i64).into()) - &self.q,
            r: self.co_r(),
        }
    }

    fn check(&self, x: &FracVector) -> Result<(), FracError> {
        let n = self.a() + self.b() + self.c();
        if n != x.len() {
            return Err(FracError::InconsistentState(format!(
                "state covers {n} vertices, vector has {}",
                x.len()
            )));
        }
        Ok(())
    }

    /// Whether `x` is integral on `C`.
    pub fn integral_on_clique(&self, x: &FracVector) -> bool {
        self.c_set.iter().all(|&i| is_integral(x.get(i)))
    }
}

fn ri(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Σ over unordered pairs of C of `w_i w_j`, via `((Σw)² − Σw²)/2`.
fn clique_pair_sum(c_set: &BTreeSet<Vertex>, w: impl Fn(Vertex) -> Rational) -> Rational {
    let mut sum = Rational::zero();
    let mut sq = Rational::zero();
    for &i in c_set {
        let wi = w(i);
        sq += &wi * &wi;
        sum += wi;
    }
    (&sum * &sum - sq) / ri(2)
}

fn edge_sum_with(g: &Graph, w: impl Fn(Vertex) -> Rational) -> Rational {
    let vals: Vec<Rational> = (0..g.v()).map(w).collect();
    let mut acc = Rational::zero();
    for (u, v) in g.edges() {
        if !vals[u].is_zero() && !vals[v].is_zero() {
            acc += &vals[u] * &vals[v];
        }
    }
    acc
}

pub fn fbar_potential(
    g: &Graph,
    x: &FracVector,
    state: &CliqueRoundState,
    p: &SplitParams,
) -> Result<Rational, FracError> {
    x.check_host(g)?;
    state.check(x)?;
    let r = ri(state.r);
    let on_c = x.sum_over(&state.c_set);
    let pairs = clique_pair_sum(&state.c_set, |i| x.get(i).clone());
    let e = edge_sum_with(g, |i| x.get(i).clone());
    Ok(&r * on_c - &r * (&r + Rational::one()) / ri(2) - pairs + e - &p.s * x.mass())
}

pub fn gbar_potential(
    g: &Graph,
    x: &FracVector,
    state: &CliqueRoundState,
    p: &SplitParams,
) -> Result<Rational, FracError> {
    x.check_host(g)?;
    state.check(x)?;
    let k = ri(state.co_r());
    let c = ri(state.c() as i64);
    let one = Rational::one();
    let on_c: Rational = state.c_set.iter().map(|&i| &one - x.get(i)).sum();
    let pairs = clique_pair_sum(&state.c_set, |i| &one - x.get(i));
    let e = edge_sum_with(g, |i| &one - x.get(i));
    let constant = (&c - ri(state.r)) * &k / ri(2);
    Ok(&k * on_c - constant - pairs + e - &p.t * x.comass())
}

/// `∂f̄/∂x_i`. For `i ∈ C` this is `r − Σ_{C∖i} x_j + Σ_{N(i)} x_k − s`.
pub fn fbar_partial(
    g: &Graph,
    x: &FracVector,
    state: &CliqueRoundState,
    p: &SplitParams,
    i: Vertex,
) -> Rational {
    let nb: Rational = g.neighbors(i).map(|k| x.get(k)).sum();
    let mut d = nb - &p.s;
    if state.c_set.contains(&i) {
        let others: Rational = state.c_set.iter().filter(|&&j| j != i).map(|&j| x.get(j)).sum();
        d += ri(state.r) - others;
    }
    d
}

/// `∂ḡ/∂x_i`. For `i ∈ C` this is `−(c−r−1) + Σ_{C∖i}(1−x_j) − Σ_{N(i)}(1−x_k) + t`.
pub fn gbar_partial(
    g: &Graph,
    x: &FracVector,
    state: &CliqueRoundState,
    p: &SplitParams,
    i: Vertex,
) -> Rational {
    let one = Rational::one();
    let nb: Rational = g.neighbors(i).map(|k| &one - x.get(k)).sum();
    let mut d = &p.t - nb;
    if state.c_set.contains(&i) {
        let others: Rational = state
            .c_set
            .iter()
            .filter(|&&j| j != i)
            .map(|&j| &one - x.get(j))
            .sum();
        d += others - ri(state.co_r());
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fractional::{half, int, quad_edge_sum, rat};
    use crate::graph::{make_complete, make_cycle};

    fn state_for(g: &Graph, y: &FracVector) -> CliqueRoundState {
        CliqueRoundState::from_point(g, y).unwrap()
    }

    #[test]
    fn reads_state_off_point() {
        let k5 = make_complete(5).unwrap();
        let y = FracVector::new(vec![int(1), rat(1, 2), rat(3, 4), int(0), rat(2, 3)]).unwrap();
        let st = state_for(&k5, &y);
        assert_eq!((st.a(), st.b(), st.c()), (1, 1, 3));
        assert_eq!(st.q, rat(23, 12));
        assert_eq!(st.r, 1);
        assert_eq!(st.co_r(), 1);
    }

    #[test]
    fn rejects_non_clique_support() {
        let c5 = make_cycle(5).unwrap();
        let y = FracVector::new(vec![half(), int(0), half(), int(1), int(0)]).unwrap();
        assert!(matches!(
            CliqueRoundState::from_point(&c5, &y),
            Err(FracError::InconsistentState(_))
        ));
    }

    #[test]
    fn fbar_equals_linear_part_when_clique_mass_is_r() {
        // C integral with p = r: the correction (p−r−(p−r)²)/2 vanishes
        let k6 = make_complete(6).unwrap();
        let p = SplitParams::new(int(1), int(1)).unwrap();
        let y = FracVector::new(vec![int(1), half(), half(), half(), int(0), int(0)]).unwrap();
        let st = state_for(&k6, &y);
        assert_eq!(st.r, 1);
        let x = FracVector::new(vec![int(1), int(1), int(0), int(0), int(0), int(1)]).unwrap();
        let linear = quad_edge_sum(&k6, &x).unwrap() - &p.s * x.mass();
        assert_eq!(fbar_potential(&k6, &x, &st, &p).unwrap(), linear);

        // p = 3 on C: (3−1 − 4)/2 = −1
        let x3 = FracVector::new(vec![int(1), int(1), int(1), int(1), int(0), int(0)]).unwrap();
        let linear3 = quad_edge_sum(&k6, &x3).unwrap() - &p.s * x3.mass();
        assert_eq!(fbar_potential(&k6, &x3, &st, &p).unwrap() - linear3, int(-1));
    }

    #[test]
    fn empty_clique_reduces_to_linear_part() {
        let g = make_cycle(6).unwrap();
        let p = SplitParams::new(rat(3, 2), int(2)).unwrap();
        let y = FracVector::new(vec![int(1), int(1), int(1), int(0), int(0), int(0)]).unwrap();
        let st = state_for(&g, &y);
        assert_eq!((st.c(), st.r), (0, 0));
        let fbar = fbar_potential(&g, &y, &st, &p).unwrap();
        assert_eq!(fbar, quad_edge_sum(&g, &y).unwrap() - &p.s * y.mass());
    }

    #[test]
    fn partials_match_unit_differences() {
        let k5 = make_complete(5).unwrap();
        let g = k5.without_edge(0, 4);
        let p = SplitParams::new(int(2), rat(3, 2)).unwrap();
        let y = FracVector::new(vec![int(1), rat(1, 3), rat(1, 2), rat(5, 6), int(0)]).unwrap();
        let st = state_for(&g, &y);
        let x = FracVector::new(vec![rat(1, 5), rat(2, 3), int(1), rat(1, 4), rat(4, 9)]).unwrap();
        for i in 0..5 {
            let mut lo = x.clone();
            lo.set(i, int(0)).unwrap();
            let mut hi = x.clone();
            hi.set(i, int(1)).unwrap();
            let df = fbar_potential(&g, &hi, &st, &p).unwrap() - fbar_potential(&g, &lo, &st, &p).unwrap();
            let dg = gbar_potential(&g, &hi, &st, &p).unwrap() - gbar_potential(&g, &lo, &st, &p).unwrap();
            assert_eq!(df, fbar_partial(&g, &x, &st, &p, i), "f̄ partial at {i}");
            assert_eq!(dg, gbar_partial(&g, &x, &st, &p, i), "ḡ partial at {i}");
        }
    }

    #[test]
    fn mirrored_state_swaps_potentials() {
        let k5 = make_complete(5).unwrap();
        let p = SplitParams::new(int(1), int(2)).unwrap();
        let y = FracVector::new(vec![int(1), rat(1, 3), rat(1, 2), rat(5, 6), int(0)]).unwrap();
        let st = state_for(&k5, &y);
        let mirrored = st.mirrored();
        assert_eq!(mirrored.mirrored(), st);
        let x = FracVector::new(vec![rat(1, 5), rat(2, 3), int(1), rat(1, 4), rat(4, 9)]).unwrap();
        assert_eq!(
            gbar_potential(&k5, &x, &st, &p).unwrap(),
            fbar_potential(&k5, &x.complement(), &mirrored, &p.swapped()).unwrap()
        );
    }
}
