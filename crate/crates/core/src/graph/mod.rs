//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Adjacency is kept as one bitset row per vertex. Graphs are immutable once
//! built; all constructors go through [`Graph::from_edges`].

mod families;
mod io;
mod random;

pub use families::{
    disjoint_union, glue_at_vertex, make_bar_k, make_complete, make_cycle, GraphFamilySpec,
};
pub use io::{parse_graph, write_graph};
pub use random::random_graph;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("graph on {n} vertices exceeds the exhaustive budget of {budget}")]
    BudgetExceeded { n: usize, budget: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The graph with no vertices.
    pub fn null() -> Self {
        Self::empty(0)
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            m: 0,
        }
    }

    /// Builds a simple graph, rejecting loops, repeated pairs and bad ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set(u, v);
            g.set(v, u);
            g.m += 1;
        }
        Ok(g)
    }

    /// Like [`Graph::from_edges`] but silently ignores repeated pairs.
    pub(crate) fn from_edges_dedup<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            assert!(u < n && v < n && u != v, "bad edge {u}-{v} for n={n}");
            if !g.has_edge(u, v) {
                g.set(u, v);
                g.set(v, u);
                g.m += 1;
            }
        }
        g
    }

    fn set(&mut self, u: Vertex, v: Vertex) {
        self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
    }

    /// v(G)
    pub fn v(&self) -> usize {
        self.n
    }

    /// e(G)
    pub fn e(&self) -> usize {
        self.m
    }

    pub fn is_null(&self) -> bool {
        self.n == 0
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(&self, u: Vertex) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Neighbourhood of `u` as a 64-bit mask. Only valid for graphs with at
    /// most 64 vertices; the exhaustive oracles all live well below that.
    pub fn mask(&self, u: Vertex) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[u * self.words]
    }

    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask view needs at most 64 vertices");
        (0..self.n).map(|u| self.mask(u)).collect()
    }

    /// Returns `g` with one extra edge. Panics if the edge is present.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Graph {
        assert!(!self.has_edge(u, v) && u != v);
        let mut g = self.clone();
        g.set(u, v);
        g.set(v, u);
        g.m += 1;
        g
    }

    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        assert!(self.has_edge(u, v));
        let mut g = self.clone();
        g.rows[u * g.words + v / 64] &= !(1u64 << (v % 64));
        g.rows[v * g.words + u / 64] &= !(1u64 << (u % 64));
        g.m -= 1;
        g
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &BTreeSet<Vertex>) -> usize {
        set.iter()
            .map(|&u| self.neighbors(u).filter(|v| *v > u && set.contains(v)).count())
            .sum()
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// odd(H): components with an odd number of vertices.
    pub fn odd_components(&self) -> usize {
        self.components().iter().filter(|c| c.len() % 2 == 1).count()
    }

    /// Exact vertex cover number τ(G), searching subsets by increasing size.
    pub fn vertex_cover_number(&self) -> Result<usize, GraphError> {
        const BUDGET: usize = 24;
        if self.n > BUDGET {
            return Err(GraphError::BudgetExceeded { n: self.n, budget: BUDGET });
        }
        let edges: Vec<(u32, u32)> = self
            .edges()
            .map(|(u, v)| (1u32 << u, 1u32 << v))
            .collect();
        if edges.is_empty() {
            return Ok(0);
        }
        let covers = |x: u32| edges.iter().all(|&(a, b)| x & (a | b) != 0);
        for size in 1..=self.n {
            // Gosper's hack over all `size`-subsets of an n-set
            let mut x: u32 = (1u32 << size) - 1;
            let limit: u64 = 1u64 << self.n;
            while (x as u64) < limit {
                if covers(x) {
                    return Ok(size);
                }
                let c = x & x.wrapping_neg();
                let r = x.wrapping_add(c);
                if r == 0 {
                    break;
                }
                x = (((r ^ x) >> 2) / c) | r;
            }
        }
        Ok(self.n)
    }

    /// Subgraph induced on `set`; the returned map sends new ids to old ones.
    pub fn induced_subgraph(&self, set: &BTreeSet<Vertex>) -> Result<(Graph, Vec<Vertex>), GraphError> {
        if let Some(&bad) = set.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let back: Vec<Vertex> = set.iter().copied().collect();
        let mut fwd = vec![usize::MAX; self.n];
        for (i, &v) in back.iter().enumerate() {
            fwd[v] = i;
        }
        let edges: Vec<_> = back
            .iter()
            .flat_map(|&u| {
                let fwd = &fwd;
                self.neighbors(u)
                    .filter(move |&v| v > u && fwd[v] != usize::MAX)
                    .map(move |v| (fwd[u], fwd[v]))
            })
            .collect();
        Ok((Graph::from_edges_dedup(back.len(), edges), back))
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::from_edges_dedup(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Complement graph.
    pub fn complement(&self) -> Graph {
        let n = self.n;
        Graph::from_edges_dedup(
            n,
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !self.has_edge(u, v)),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// JSON form: `{"n": 4, "edges": [[0, 1], [1, 2]]}`.
#[derive(Serialize, Deserialize)]
struct EdgeList {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        EdgeList { n: self.n, edges: self.edges().collect() }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let list = EdgeList::deserialize(de)?;
        Graph::from_edges(list.n, list.edges).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let g = make_cycle(5).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"n":5,"edges":[[0,1],[0,4],[1,2],[2,3],[3,4]]}"#);
        assert_eq!(serde_json::from_str::<Graph>(&text).unwrap(), g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn components_and_odd_components() {
        let two_triangles = disjoint_union(&[make_cycle(3).unwrap(), make_cycle(3).unwrap()]);
        assert_eq!(two_triangles.components().len(), 2);
        assert_eq!(make_complete(5).unwrap().components().len(), 1);
        assert!(Graph::null().components().is_empty());

        let c3c4 = disjoint_union(&[make_cycle(3).unwrap(), make_cycle(4).unwrap()]);
        assert_eq!(c3c4.odd_components(), 1);
        let c5 = make_cycle(5).unwrap();
        assert_eq!(disjoint_union(&[c5.clone(), c5.clone(), c5]).odd_components(), 3);
        assert_eq!(make_cycle(6).unwrap().odd_components(), 0);
    }

    #[test]
    fn vertex_cover_examples() {
        assert_eq!(make_complete(5).unwrap().vertex_cover_number(), Ok(4));
        assert_eq!(Graph::empty(7).vertex_cover_number(), Ok(0));
        assert_eq!(make_cycle(5).unwrap().vertex_cover_number(), Ok(3));
        assert_eq!(Graph::null().vertex_cover_number(), Ok(0));
        assert!(matches!(
            Graph::empty(25).vertex_cover_number(),
            Err(GraphError::BudgetExceeded { n: 25, .. })
        ));
    }

    #[test]
    fn vertex_cover_of_k_copies() {
        let k4 = make_complete(4).unwrap();
        let three = disjoint_union(&[k4.clone(), k4.clone(), k4]);
        assert_eq!(three.vertex_cover_number(), Ok(9));
    }

    #[test]
    fn induced_subgraph_examples() {
        let k5 = make_complete(5).unwrap();
        let (k3, back) = k5.induced_subgraph(&set(&[0, 1, 2])).unwrap();
        assert_eq!((k3.v(), k3.e()), (3, 3));
        assert_eq!(back, vec![0, 1, 2]);

        let (null, _) = k5.induced_subgraph(&BTreeSet::new()).unwrap();
        assert!(null.is_null());

        let (path, _) = make_cycle(5).unwrap().induced_subgraph(&set(&[0, 1, 2])).unwrap();
        assert_eq!(path.e(), 2);

        assert!(k5.induced_subgraph(&set(&[0, 9])).is_err());
    }

    #[test]
    fn wide_graphs_use_several_words() {
        let g = Graph::from_edges(130, [(0, 129), (64, 65), (3, 127)]).unwrap();
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![129]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 129), (3, 127), (64, 65)]);
        assert_eq!(g.components().len(), 127);
    }
}
