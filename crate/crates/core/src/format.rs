//! Text encodings: the plain edge-list format and graph6.
//!
//! Edge list: a header line `n m` followed by `m` lines `u v` with 0-based
//! endpoints. Repeated pairs become parallel edges. Blank lines and lines
//! starting with `#` are ignored. Serialization is byte-deterministic.
//!
//! graph6 follows the standard 6-bit encoding of the upper triangle of the
//! adjacency matrix and therefore only carries simple graphs.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Parses the edge-list format.
pub fn parse_edgelist(text: &str) -> Result<MultiGraph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    });
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 0, "missing `n m` header"))?;
    let (n, m) = parse_pair(hline + 1, header)?;
    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines {
        let (u, v) = parse_pair(idx + 1, line)?;
        if edges.len() == m {
            return Err(Error::parse(
                idx + 1,
                0,
                format!("more than the {m} declared edges"),
            ));
        }
        for x in [u, v] {
            if x >= n {
                return Err(Error::parse(
                    idx + 1,
                    0,
                    format!("vertex {x} out of range 0..{n}"),
                ));
            }
        }
        if u == v {
            return Err(Error::parse(idx + 1, 0, format!("loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            text.lines().count().max(1),
            0,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    MultiGraph::new(n, edges)
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = fields
            .next()
            .ok_or_else(|| Error::parse(line_no, line.len(), format!("missing {what}")))?;
        let byte = tok.as_ptr() as usize - line.as_ptr() as usize;
        tok.parse().map_err(|_| {
            Error::parse(
                line_no,
                byte,
                format!("`{tok}` is not a nonnegative integer"),
            )
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        let byte = extra.as_ptr() as usize - line.as_ptr() as usize;
        return Err(Error::parse(line_no, byte, "trailing field"));
    }
    Ok((a, b))
}

/// Serializes to the edge-list format, edges in id order.
pub fn to_edgelist(g: &MultiGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), g.size());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses one graph6 string (an optional `>>graph6<<` header is accepted).
///
/// Edges are numbered in the order the encoding lists them: by the larger
/// endpoint, then the smaller.
pub fn parse_graph6(text: &str) -> Result<MultiGraph> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                1,
                i,
                format!("byte {b:#04x} outside the graph6 range"),
            ));
        }
    }
    let (n, body_start) = match bytes {
        [] => return Err(Error::parse(1, 0, "empty graph6 string")),
        [126, 126, ..] => {
            if bytes.len() < 8 {
                return Err(Error::parse(1, bytes.len(), "truncated 36-bit order"));
            }
            (decode_order(&bytes[2..8]), 8)
        }
        [126, ..] => {
            if bytes.len() < 4 {
                return Err(Error::parse(1, bytes.len(), "truncated 18-bit order"));
            }
            (decode_order(&bytes[1..4]), 4)
        }
        [b, ..] => ((*b - 63) as usize, 1),
    };
    let body = &bytes[body_start..];
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(Error::parse(
            1,
            body_start + body.len().min(need),
            format!(
                "expected {need} adjacency bytes for {n} vertices, found {}",
                body.len()
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // Padding bits must be zero.
    if bits % 6 != 0 {
        let last = body[need - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(
                1,
                body_start + need - 1,
                "nonzero padding bits",
            ));
        }
    }
    MultiGraph::new(n, edges)
}

fn decode_order(chunk: &[u8]) -> usize {
    chunk
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

/// Encodes a simple graph as graph6 (no header, no newline).
pub fn to_graph6(g: &MultiGraph) -> Result<String> {
    let n = g.order();
    let mut adj = vec![false; n * n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if adj[u * n + v] {
            return Err(Error::NotSimple { edge: e });
        }
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | adj[i * n + j] as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses a corpus file with one graph6 string per line.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<MultiGraph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|e| match e {
                Error::Parse { byte, message, .. } => Error::Parse {
                    line: i + 1,
                    byte,
                    message,
                },
                other => other,
            })
        })
        .collect()
}

/// Parses either format, deciding by whether the first meaningful line has
/// whitespace-separated fields.
pub fn parse_any(text: &str) -> Result<MultiGraph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.split_whitespace().count() >= 2 {
        parse_edgelist(text)
    } else {
        parse_graph6(first)
    }
}
