//! graph6 and edge-list serialization.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! into 6-bit groups offset by 63; edge lists are "u v" per line, 0-based.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IoError {
    #[error("empty input")]
    Empty,
    #[error("invalid graph6 byte {0:#x}")]
    BadGraph6Byte(u8),
    #[error("graph6 data truncated")]
    Truncated,
    #[error("graph too large for this encoder")]
    TooLarge,
    #[error("bad edge list line: {0}")]
    BadEdgeLine(String),
    #[error("graph error: {0}")]
    Graph(#[from] crate::graph::GraphError),
}

/// Encodes a graph as a graph6 string (supports n < 2^18).
pub fn to_graph6(g: &Graph) -> Result<String, IoError> {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else if n <= 258_047 {
        bytes.push(126);
        bytes.push(((n >> 12) & 0x3f) as u8 + 63);
        bytes.push(((n >> 6) & 0x3f) as u8 + 63);
        bytes.push((n & 0x3f) as u8 + 63);
    } else {
        return Err(IoError::TooLarge);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                bytes.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(bytes).unwrap())
}

/// Decodes a graph6 string (an optional `>>graph6<<` header is stripped).
pub fn from_graph6(s: &str) -> Result<Graph, IoError> {
    let s = s.trim().strip_prefix(">>graph6<<").unwrap_or(s.trim());
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(IoError::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(IoError::BadGraph6Byte(b));
        }
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(IoError::Truncated);
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    let mut g = Graph::new(n);
    let mut acc = 0u32;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            if nbits == 0 {
                if pos >= bytes.len() {
                    return Err(IoError::Truncated);
                }
                acc = (bytes[pos] - 63) as u32;
                nbits = 6;
                pos += 1;
            }
            nbits -= 1;
            if (acc >> nbits) & 1 == 1 {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// Emits the edge list, one "u v" line per edge in lexicographic order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses whitespace-separated "u v" pairs; n is the largest id plus one.
pub fn from_edge_list(s: &str) -> Result<Graph, IoError> {
    let mut edges = Vec::new();
    let mut n = 0usize;
    for line in s.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => {
                let u: usize = u
                    .parse()
                    .map_err(|_| IoError::BadEdgeLine(line.to_string()))?;
                let v: usize = v
                    .parse()
                    .map_err(|_| IoError::BadEdgeLine(line.to_string()))?;
                (u, v)
            }
            _ => return Err(IoError::BadEdgeLine(line.to_string())),
        };
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(IoError::Empty);
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Reads a graph from text, auto-detecting graph6 versus edge-list format.
///
/// Edge lists start with a digit or comment; graph6 payload bytes are all in
/// the 63..=126 range and the first byte is never a digit below '?'.
pub fn parse_auto(s: &str) -> Result<Graph, IoError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(IoError::Empty);
    }
    if t.starts_with(">>graph6<<") {
        return from_graph6(t);
    }
    let first_line = t.lines().next().unwrap();
    let looks_like_edges = first_line
        .chars()
        .all(|c| c.is_ascii_digit() || c.is_whitespace())
        || first_line.starts_with('#');
    if looks_like_edges {
        from_edge_list(t)
    } else {
        from_graph6(t)
    }
}
