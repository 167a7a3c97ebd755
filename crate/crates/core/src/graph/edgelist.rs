//! Plain-text edge lists: an optional `vertices N` header, then one edge
//! `u v` per line with 0-indexed endpoints. Blank lines and `#` comments are
//! ignored. Without a header the order is one more than the largest endpoint.

use super::simple::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse { line: line_no, message };
        if let Some(rest) = line.strip_prefix("vertices") {
            if order.is_some() || !edges.is_empty() {
                return Err(parse_err("`vertices` header must come first".into()));
            }
            order = Some(rest.trim().parse().map_err(|_| parse_err(format!("bad vertex count `{}`", rest.trim())))?);
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(format!("expected two endpoints, found `{line}`")));
        }
        let u: usize = fields[0].parse().map_err(|_| parse_err(format!("bad vertex `{}`", fields[0])))?;
        let v: usize = fields[1].parse().map_err(|_| parse_err(format!("bad vertex `{}`", fields[1])))?;
        if u == v {
            return Err(parse_err(format!("loop at vertex {u}")));
        }
        edges.push((u.min(v), u.max(v), line_no));
    }
    let n = order.unwrap_or_else(|| edges.iter().map(|&(_, v, _)| v + 1).max().unwrap_or(0));
    let mut seen = std::collections::HashSet::new();
    for &(u, v, line) in &edges {
        if v >= n {
            return Err(Error::Parse { line, message: format!("vertex {v} out of range for {n} vertices") });
        }
        if !seen.insert((u, v)) {
            return Err(Error::Parse { line, message: format!("repeated edge {u} {v}") });
        }
    }
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
    Graph::from_edges(n, &pairs)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("vertices {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
