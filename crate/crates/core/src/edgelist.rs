//! Plain-text edge lists.
//!
//! One edge per line as two whitespace-separated, 0-based vertex ids.
//! Lines whose first non-blank character is `#` are comments and blank
//! lines are skipped. The vertex count is the largest id plus one.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses and validates an edge list.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: idx + 1,
            message,
        };
        let mut fields = line.split_whitespace();
        let mut next_id = || -> Result<usize> {
            let tok = fields
                .next()
                .ok_or_else(|| parse_err("expected two vertex ids".into()))?;
            tok.parse()
                .map_err(|_| parse_err(format!("invalid vertex id `{tok}`")))
        };
        let (u, v) = (next_id()?, next_id()?);
        if let Some(extra) = fields.next() {
            return Err(parse_err(format!("unexpected trailing field `{extra}`")));
        }
        edges.push((u, v));
    }
    let vertex_count = edges
        .iter()
        .map(|&(u, v)| u.max(v) + 1)
        .max()
        .ok_or_else(|| Error::Input("edge list contains no edges".into()))?;
    Graph::from_edges(vertex_count, edges)
}

/// Writes one `u v` line per edge in sorted order.
pub fn to_edge_list(graph: &Graph) -> String {
    let mut out = String::with_capacity(graph.edge_count() * 8);
    for e in graph.edges() {
        let _ = writeln!(out, "{} {}", e.u, e.v);
    }
    out
}
