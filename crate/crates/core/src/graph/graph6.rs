//! graph6 codec: `N(n)` followed by the upper triangle of the adjacency
//! matrix, column by column, packed six bits per byte with offset 63.

use super::simple::Graph;
use crate::error::{Error, Result};

/// Largest order supported by the 1- and 4-byte size headers.
pub const MAX_ORDER: usize = 258_047;

fn g6_err(position: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { position, message: message.into() }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph6 encoder is capped at {MAX_ORDER} vertices");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.is_adjacent(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(g6_err(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(i, format!("byte {b:#04x} outside 63..=126")));
        }
    }
    let (n, mut pos) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(g6_err(bytes.len(), "truncated size header"));
        }
        if bytes[1] == 126 {
            return Err(g6_err(1, format!("orders above {MAX_ORDER} are not supported")));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(g6_err(
            bytes.len().min(pos + needed),
            format!("expected {needed} data bytes for n = {n}, found {}", bytes.len() - pos),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit.is_multiple_of(6) {
                current = bytes[pos] - 63;
                pos += 1;
            }
            if (current >> (5 - bit % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    let padding = (6 - bit % 6) % 6;
    if padding > 0 && current & ((1 << padding) - 1) != 0 {
        return Err(g6_err(pos - 1, "nonzero padding bits"));
    }
    Graph::from_edges(n, &edges)
}

/// Decodes a newline-separated stream, skipping blank lines.
pub fn decode_stream(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if !trimmed.trim().is_empty() {
            out.push(decode(trimmed).map_err(|e| match e {
                Error::Graph6 { position, message } => Error::Graph6 { position: offset + position, message },
                other => other,
            })?);
        }
        offset += line.len();
    }
    Ok(out)
}
