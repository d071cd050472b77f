//! Points of the cube `[0,1]^V(G)` with exact rational coordinates, and the
//! potentials the splitter steers by.
//!
//! For a point `x` write `e(x) = Σ_{ij∈E} x_i x_j` and `|x| = Σ x_i`. Then
//!
//! * `f(x) = e(x) − (s+½)|x|`
//! * `g(x) = e(1−x) − (t+½)|1−x|`
//!
//! A point is *balanced* when `f(x) > −(s+½)²/(s+t+1)`,
//! `g(x) > −(t+½)²/(s+t+1)`, `|x| ≥ s+1` and `|1−x| ≥ t+1`.
//!
//! Nothing in here touches floating point; every branch decision downstream
//! is a strict comparison and must be exact.

mod adjusted;
mod rational;

pub use adjusted::{fbar_partial, fbar_potential, gbar_partial, gbar_potential, CliqueRoundState};
pub use rational::{
    floor_int, format_rational, half, in_unit_interval, int, is_integral, parse_rational, rat,
    serde_rational, serde_rational_vec, Rational,
};

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FracError {
    #[error("vector has {got} entries but the graph has {expected} vertices")]
    Mismatch { expected: usize, got: usize },
    #[error("entry {index} is outside [0,1]")]
    OutOfBox { index: usize },
    #[error("split parameters need s >= 1 and t >= 1")]
    InvalidParams,
    #[error("cannot parse rational {0:?} (expected p/q or an integer)")]
    Parse(String),
    #[error("clique state is inconsistent with the vector: {0}")]
    InconsistentState(String),
}

/// A point of `[0,1]^V`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FracVector {
    #[serde(with = "serde_rational_vec")]
    entries: Vec<Rational>,
}

impl FracVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self, FracError> {
        if let Some(index) = entries.iter().position(|x| !in_unit_interval(x)) {
            return Err(FracError::OutOfBox { index });
        }
        Ok(FracVector { entries })
    }

    pub fn constant(n: usize, value: Rational) -> Result<Self, FracError> {
        Self::new(vec![value; n])
    }

    pub fn zeros(n: usize) -> Self {
        FracVector { entries: vec![Rational::zero(); n] }
    }

    pub fn ones(n: usize) -> Self {
        FracVector { entries: vec![Rational::one(); n] }
    }

    /// Indicator vector of `set`.
    pub fn indicator(n: usize, set: &BTreeSet<Vertex>) -> Self {
        FracVector {
            entries: (0..n)
                .map(|i| if set.contains(&i) { Rational::one() } else { Rational::zero() })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: Vertex) -> &Rational {
        &self.entries[i]
    }

    pub fn set(&mut self, i: Vertex, value: Rational) -> Result<(), FracError> {
        if !in_unit_interval(&value) {
            return Err(FracError::OutOfBox { index: i });
        }
        self.entries[i] = value;
        Ok(())
    }

    /// `1 − x`.
    pub fn complement(&self) -> FracVector {
        FracVector {
            entries: self.entries.iter().map(|x| Rational::one() - x).collect(),
        }
    }

    /// `|x|`, the sum of the coordinates.
    pub fn mass(&self) -> Rational {
        self.entries.iter().sum()
    }

    /// `|1 − x|`.
    pub fn comass(&self) -> Rational {
        Rational::from_integer(self.entries.len().into()) - self.mass()
    }

    pub fn sum_over<'a>(&self, set: impl IntoIterator<Item = &'a Vertex>) -> Rational {
        set.into_iter().map(|&i| &self.entries[i]).sum()
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(is_integral)
    }

    pub fn check_host(&self, g: &Graph) -> Result<(), FracError> {
        if self.entries.len() != g.v() {
            return Err(FracError::Mismatch { expected: g.v(), got: self.entries.len() });
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for FracVector {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let entries = serde_rational_vec::deserialize(de)?;
        FracVector::new(entries).map_err(serde::de::Error::custom)
    }
}

/// The density targets `(s, t)`, both at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitParams {
    #[serde(with = "serde_rational")]
    pub s: Rational,
    #[serde(with = "serde_rational")]
    pub t: Rational,
}

impl SplitParams {
    pub fn new(s: Rational, t: Rational) -> Result<Self, FracError> {
        if s < Rational::one() || t < Rational::one() {
            return Err(FracError::InvalidParams);
        }
        Ok(SplitParams { s, t })
    }

    pub fn swapped(&self) -> SplitParams {
        SplitParams { s: self.t.clone(), t: self.s.clone() }
    }

    /// `s + t + 1`
    pub fn total(&self) -> Rational {
        &self.s + &self.t + Rational::one()
    }

    /// Right-hand side of the balance condition on `f`: `−(s+½)²/(s+t+1)`.
    pub fn f_floor(&self) -> Rational {
        let sh = &self.s + half();
        -(&sh * &sh) / self.total()
    }

    /// `−(t+½)²/(s+t+1)`
    pub fn g_floor(&self) -> Rational {
        let th = &self.t + half();
        -(&th * &th) / self.total()
    }
}

/// `e(x) = Σ_{ij∈E} x_i x_j`
pub fn quad_edge_sum(g: &Graph, x: &FracVector) -> Result<Rational, FracError> {
    x.check_host(g)?;
    Ok(edge_sum(g, x.entries()))
}

fn edge_sum(g: &Graph, xs: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (u, v) in g.edges() {
        if xs[u].is_zero() || xs[v].is_zero() {
            continue;
        }
        acc += &xs[u] * &xs[v];
    }
    acc
}

/// `f(x) = e(x) − (s+½)|x|`
pub fn f_potential(g: &Graph, x: &FracVector, p: &SplitParams) -> Result<Rational, FracError> {
    Ok(quad_edge_sum(g, x)? - (&p.s + half()) * x.mass())
}

/// `g(x) = e(1−x) − (t+½)|1−x|`
pub fn g_potential(g: &Graph, x: &FracVector, p: &SplitParams) -> Result<Rational, FracError> {
    x.check_host(g)?;
    let y = x.complement();
    Ok(edge_sum(g, y.entries()) - (&p.t + half()) * y.mass())
}

/// `∂f/∂x_i = Σ_{k∈N(i)} x_k − (s+½)`; exact since `f` is affine in each coordinate.
pub fn f_partial(g: &Graph, x: &FracVector, p: &SplitParams, i: Vertex) -> Rational {
    let nb: Rational = g.neighbors(i).map(|k| x.get(k)).sum();
    nb - (&p.s + half())
}

/// `∂g/∂x_i = (t+½) − Σ_{k∈N(i)} (1 − x_k)`
pub fn g_partial(g: &Graph, x: &FracVector, p: &SplitParams, i: Vertex) -> Rational {
    let nb: Rational = g.neighbors(i).map(|k| Rational::one() - x.get(k)).sum();
    (&p.t + half()) - nb
}

/// Per-condition outcome of the balance test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalanceReport {
    #[serde(with = "serde_rational")]
    pub f_value: Rational,
    #[serde(with = "serde_rational")]
    pub g_value: Rational,
    #[serde(with = "serde_rational")]
    pub mass: Rational,
    #[serde(with = "serde_rational")]
    pub comass: Rational,
    /// `f(x) > −(s+½)²/(s+t+1)`
    pub f_ok: bool,
    /// `g(x) > −(t+½)²/(s+t+1)`
    pub g_ok: bool,
    /// `|x| ≥ s+1`
    pub mass_ok: bool,
    /// `|1−x| ≥ t+1`
    pub comass_ok: bool,
}

impl BalanceReport {
    pub fn balanced(&self) -> bool {
        self.f_ok && self.g_ok && self.mass_ok && self.comass_ok
    }

    pub fn failed(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.f_ok {
            out.push("f above floor");
        }
        if !self.g_ok {
            out.push("g above floor");
        }
        if !self.mass_ok {
            out.push("|x| >= s+1");
        }
        if !self.comass_ok {
            out.push("|1-x| >= t+1");
        }
        out
    }
}

pub fn is_balanced(g: &Graph, x: &FracVector, p: &SplitParams) -> Result<BalanceReport, FracError> {
    let f_value = f_potential(g, x, p)?;
    let g_value = g_potential(g, x, p)?;
    let mass = x.mass();
    let comass = x.comass();
    Ok(BalanceReport {
        f_ok: f_value > p.f_floor(),
        g_ok: g_value > p.g_floor(),
        mass_ok: mass >= &p.s + Rational::one(),
        comass_ok: comass >= &p.t + Rational::one(),
        f_value,
        g_value,
        mass,
        comass,
    })
}

/// fr(x): coordinates strictly between 0 and 1.
pub fn fractional_support(x: &FracVector) -> BTreeSet<Vertex> {
    x.entries()
        .iter()
        .enumerate()
        .filter(|(_, v)| !is_integral(v))
        .map(|(i, _)| i)
        .collect()
}
