//! Text formats: whitespace edge lists, graph6, and Graphviz DOT output.
//!
//! Edge-list files start with a line `n m` followed by `m` lines `i j` of
//! 1-based labels. A `#` starts a comment that runs to the end of the line.
//!
//! graph6 follows the nauty definition: the vertex count as one byte `n + 63`
//! (or `~` and three 6-bit bytes for larger `n`), then the upper triangle of
//! the adjacency matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ..`
//! packed six bits per byte, each byte offset by 63, zero padded.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses the edge-list text format.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(ParseError::Empty)?;
    let (n, m) = parse_pair(hline, header)?;
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge(n).into());
    }
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let (i, j) = parse_pair(line, body)?;
        let bad = |msg: String| ParseError::EdgeList { line, msg };
        if i == 0 || i > n || j == 0 || j > n {
            return Err(bad(format!("label out of range 1..={n} in edge ({i},{j})")));
        }
        if i == j {
            return Err(bad(format!("self-loop at {i}")));
        }
        edges.push((i, j));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeList {
            line: hline,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::from_labeled_edges(n, &edges)?)
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize), ParseError> {
    let bad = |msg: String| ParseError::EdgeList { line, msg };
    let mut it = body.split_whitespace();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let tok = it.next().ok_or_else(|| bad(format!("missing {what}")))?;
        tok.parse().map_err(|_| bad(format!("invalid {what} {tok:?}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = it.next() {
        return Err(bad(format!("unexpected token {extra:?}")));
    }
    Ok((a, b))
}

/// Writes the edge-list format, 1-based.
pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (i, j) in edges {
        let _ = writeln!(out, "{} {}", i + 1, j + 1);
    }
    out
}

/// Reads either format: a first content line holding a single token is
/// graph6, anything else an edge list.
pub fn parse_graph_text(text: &str) -> Result<Graph, ParseError> {
    let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
    match first {
        None => Err(ParseError::Empty),
        Some(line) if line.split_whitespace().count() == 1 => parse_graph6(line),
        Some(_) => parse_edge_list(text),
    }
}

/// Decodes a graph6 string. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(ParseError::Graph6(format!("invalid byte 0x{b:02x}")));
        }
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(ParseError::Graph6("36-bit size headers are not supported".into()));
        }
        if bytes.len() < 4 {
            return Err(ParseError::Graph6("truncated size header".into()));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n < 63 {
            return Err(ParseError::Graph6(format!("non-canonical size header for n={n}")));
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge(n).into());
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() != nbytes {
        return Err(ParseError::Graph6(format!(
            "expected {nbytes} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in nbits..nbytes * 6 {
        if bit(k) {
            return Err(ParseError::Graph6("padding bits are not zero".into()));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Encodes a graph as graph6 (no header).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Graphviz DOT with 1-based node names.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {};", v + 1);
    }
    for (i, j) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", i + 1, j + 1);
    }
    out.push_str("}\n");
    out
}
