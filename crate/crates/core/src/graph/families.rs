//! Constructors for the graph families used throughout the crate.
//!
//! Vertex layouts are fixed so that traces and witnesses are reproducible:
//!
//! * `K_t`: vertices `0..t`.
//! * `C_k`: edges `i ~ i+1 (mod k)`.
//! * `barK(t, n)`: `0..t` is the clique side, `t..n` the independent side.
//! * disjoint union: parts are laid out consecutively in the given order.
//! * `G_k` (glued copies): copy 0 keeps its labels; vertex `v >= 1` of copy
//!   `c` becomes `c*(v(g)-1) + v`; vertex 0 is shared by all copies.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

pub fn make_complete(t: usize) -> Result<Graph, GraphError> {
    if t == 0 {
        return Err(GraphError::InvalidFamily("K_t needs t >= 1".into()));
    }
    Ok(Graph::from_edges_dedup(
        t,
        (0..t).flat_map(|u| (u + 1..t).map(move |v| (u, v))),
    ))
}

pub fn make_cycle(k: usize) -> Result<Graph, GraphError> {
    if k < 3 {
        return Err(GraphError::InvalidFamily(format!("C_k needs k >= 3, got {k}")));
    }
    Ok(Graph::from_edges_dedup(k, (0..k).map(|i| (i, (i + 1) % k))))
}

pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let n = parts.iter().map(Graph::v).sum();
    let mut edges = Vec::new();
    let mut offset = 0;
    for p in parts {
        edges.extend(p.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += p.v();
    }
    Graph::from_edges_dedup(n, edges)
}

/// K̄_{t,n−t}: complete bipartite `K_{t,n−t}` with the `t`-side made a clique.
pub fn make_bar_k(t: usize, n: usize) -> Result<Graph, GraphError> {
    if t > n {
        return Err(GraphError::InvalidFamily(format!("barK needs t <= n, got t={t}, n={n}")));
    }
    Ok(Graph::from_edges_dedup(
        n,
        (0..t).flat_map(|u| (u + 1..n).map(move |v| (u, v))),
    ))
}

/// `k` copies of `g` sharing vertex 0.
pub fn glue_at_vertex(g: &Graph, k: usize) -> Result<Graph, GraphError> {
    if g.is_null() {
        return Err(GraphError::InvalidFamily("cannot glue copies of the null graph".into()));
    }
    if k == 0 {
        return Err(GraphError::InvalidFamily("glue needs k >= 1".into()));
    }
    let step = g.v() - 1;
    let map = |c: usize, v: usize| if v == 0 { 0 } else { c * step + v };
    let edges: Vec<_> = (0..k)
        .flat_map(|c| g.edges().map(move |(u, v)| (map(c, u), map(c, v))))
        .collect();
    Ok(Graph::from_edges_dedup(k * step + 1, edges))
}

/// Names one of the constructions above. Parses and prints as e.g. `K4`,
/// `C5`, `2C3`, `C3+C5`, `barK(3,8)`, `glue(C4,3)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum GraphFamilySpec {
    Complete(usize),
    Cycle(usize),
    BarK { t: usize, n: usize },
    Glued { base: Box<GraphFamilySpec>, copies: usize },
    Union(Vec<GraphFamilySpec>),
}

impl GraphFamilySpec {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match self {
            GraphFamilySpec::Complete(t) => make_complete(*t),
            GraphFamilySpec::Cycle(k) => make_cycle(*k),
            GraphFamilySpec::BarK { t, n } => make_bar_k(*t, *n),
            GraphFamilySpec::Glued { base, copies } => glue_at_vertex(&base.build()?, *copies),
            GraphFamilySpec::Union(parts) => {
                let built = parts.iter().map(Self::build).collect::<Result<Vec<_>, _>>()?;
                Ok(disjoint_union(&built))
            }
        }
    }

    fn is_repeat(&self) -> bool {
        match self {
            GraphFamilySpec::Union(parts) => {
                parts.len() > 1
                    && parts.iter().all(|p| p == &parts[0])
                    && !matches!(parts[0], GraphFamilySpec::Union(_))
            }
            _ => false,
        }
    }

    /// `k` disjoint copies of `self`.
    pub fn times(self, k: usize) -> GraphFamilySpec {
        GraphFamilySpec::Union(vec![self; k])
    }
}

impl fmt::Display for GraphFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamilySpec::Complete(t) => write!(f, "K{t}"),
            GraphFamilySpec::Cycle(k) => write!(f, "C{k}"),
            GraphFamilySpec::BarK { t, n } => write!(f, "barK({t},{n})"),
            GraphFamilySpec::Glued { base, copies } => write!(f, "glue({base},{copies})"),
            GraphFamilySpec::Union(parts) => {
                if self.is_repeat() {
                    return write!(f, "{}{}", parts.len(), parts[0]);
                }
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    match p {
                        GraphFamilySpec::Union(_) if !p.is_repeat() => write!(f, "({p})")?,
                        _ => write!(f, "{p}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

impl From<GraphFamilySpec> for String {
    fn from(spec: GraphFamilySpec) -> String {
        spec.to_string()
    }
}

impl TryFrom<String> for GraphFamilySpec {
    type Error = GraphError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

fn bad(s: &str) -> GraphError {
    GraphError::InvalidFamily(format!("cannot parse family spec {s:?}"))
}

/// Splits on `sep` at parenthesis depth zero.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_usize(s: &str, whole: &str) -> Result<usize, GraphError> {
    s.trim().parse().map_err(|_| bad(whole))
}

fn parse_term(term: &str, whole: &str) -> Result<GraphFamilySpec, GraphError> {
    let term = term.trim();
    let digits = term.chars().take_while(char::is_ascii_digit).count();
    if digits > 0 {
        let k = parse_usize(&term[..digits], whole)?;
        if k == 0 {
            return Err(bad(whole));
        }
        let inner = parse_term(&term[digits..], whole)?;
        return Ok(if k == 1 { inner } else { inner.times(k) });
    }
    if let Some(rest) = term.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        return rest.parse();
    }
    if let Some(args) = term.strip_prefix("barK(").and_then(|r| r.strip_suffix(')')) {
        let parts = split_top(args, ',');
        if parts.len() != 2 {
            return Err(bad(whole));
        }
        return Ok(GraphFamilySpec::BarK {
            t: parse_usize(parts[0], whole)?,
            n: parse_usize(parts[1], whole)?,
        });
    }
    if let Some(args) = term.strip_prefix("glue(").and_then(|r| r.strip_suffix(')')) {
        let parts = split_top(args, ',');
        if parts.len() != 2 {
            return Err(bad(whole));
        }
        return Ok(GraphFamilySpec::Glued {
            base: Box::new(parts[0].parse()?),
            copies: parse_usize(parts[1], whole)?,
        });
    }
    if let Some(t) = term.strip_prefix('K') {
        return Ok(GraphFamilySpec::Complete(parse_usize(t, whole)?));
    }
    if let Some(k) = term.strip_prefix('C') {
        return Ok(GraphFamilySpec::Cycle(parse_usize(k, whole)?));
    }
    Err(bad(whole))
}

impl FromStr for GraphFamilySpec {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let terms = split_top(s, '+');
        if terms.iter().any(|t| t.trim().is_empty()) {
            return Err(bad(s));
        }
        let mut specs = terms
            .iter()
            .map(|t| parse_term(t, s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(if specs.len() == 1 {
            specs.pop().unwrap()
        } else {
            GraphFamilySpec::Union(specs)
        })
    }
}
