//! Plain edge-list text: the order `n` followed by whitespace-separated
//! pairs of 1-based vertex labels.

use crate::error::ParseError;
use crate::graph::{Graph, VertexSet, MAX_ORDER};

/// Parse an edge list. Duplicate edges collapse; self-loops and labels
/// outside `1..=n` are rejected. Text after `#` on a line is ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut tokens = text
        .lines()
        .map(|line| line.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace)
        .enumerate()
        .map(|(i, t)| {
            t.parse::<usize>().map_err(|_| ParseError::BadToken {
                token: i + 1,
                text: t.to_string(),
            })
        });

    let n = tokens.next().ok_or(ParseError::Empty)??;
    if n > MAX_ORDER {
        return Err(ParseError::DeclaredOrderTooLarge(n));
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut token = 1;
    while let Some(u) = tokens.next() {
        let u = u?;
        let v = tokens.next().ok_or(ParseError::DanglingEndpoint)??;
        token += 2;
        for (label, at) in [(u, token - 1), (v, token)] {
            if label == 0 || label > n {
                return Err(ParseError::LabelOutOfRange { token: at, label, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { token: token - 1, label: u });
        }
        adj[u - 1] = adj[u - 1].with(v - 1);
        adj[v - 1] = adj[v - 1].with(u - 1);
    }
    Ok(Graph::from_adjacency(adj).expect("edge list adjacency is symmetric"))
}

/// Render as an edge list with 1-based labels, one edge per line.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}
