//! Plain-text graph format: a header `n m`, then `m` edge lines `u v` with
//! `0 <= u < v < n`. Tokens are whitespace separated; self-loops, repeated
//! edges and reversed pairs are rejected.

use super::{Graph, GraphError};

pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut tokens = text
        .lines()
        .enumerate()
        .flat_map(|(i, line)| line.split_whitespace().map(move |tok| (i + 1, tok)));
    let mut next_num = |what: &str| -> Result<(usize, usize), GraphError> {
        let (line, tok) = tokens.next().ok_or_else(|| GraphError::Parse {
            line: 0,
            msg: format!("unexpected end of input, expected {what}"),
        })?;
        let val = tok.parse::<usize>().map_err(|_| GraphError::Parse {
            line,
            msg: format!("expected {what}, found {tok:?}"),
        })?;
        Ok((line, val))
    };
    let (_, n) = next_num("vertex count")?;
    let (_, m) = next_num("edge count")?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for _ in 0..m {
        let (line, u) = next_num("edge endpoint")?;
        let (_, v) = next_num("edge endpoint")?;
        if u == v {
            return Err(GraphError::Parse { line, msg: format!("self-loop {u} {v}") });
        }
        if u > v {
            return Err(GraphError::Parse { line, msg: format!("edge {u} {v} must be written as u < v") });
        }
        if v >= n {
            return Err(GraphError::Parse { line, msg: format!("vertex {v} out of range (n = {n})") });
        }
        if !seen.insert((u, v)) {
            return Err(GraphError::Parse { line, msg: format!("duplicate edge {u} {v}") });
        }
        edges.push((u, v));
    }
    if let Some((line, tok)) = tokens.next() {
        return Err(GraphError::Parse { line, msg: format!("trailing token {tok:?}") });
    }
    Graph::from_edges(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.v(), g.e());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
