//! Graph text formats: graph6 and a plain edge list.
//!
//! graph6 follows the standard definition: the order `n` encoded as printable
//! characters (offset 63), then the upper triangle of the adjacency matrix in
//! column-major order, six bits per character, zero-padded. The edge-list
//! format is `n m` on the first line followed by `m` lines `u v` (0-based);
//! `#` starts a comment.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Serialize to graph6. Orders up to 62 use the one-byte header; 63 and 64
/// use the standard three-byte long form.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).unwrap()
}

/// Parse a single graph6 string. Errors carry the byte offset of the defect.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let b = s.trim_end_matches(['\n', '\r']).as_bytes();
    let fail = |offset: usize, msg: &str| Error::Graph6 {
        offset,
        msg: msg.into(),
    };
    if b.is_empty() {
        return Err(fail(0, "empty input"));
    }
    for (i, &c) in b.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(fail(i, &format!("character {:?} outside graph6 range", c as char)));
        }
    }
    let (n, body_start) = if b[0] == b'~' {
        if b.len() >= 2 && b[1] == b'~' {
            if b.len() < 8 {
                return Err(fail(b.len(), "truncated 8-byte order header"));
            }
            let n = b[2..8].iter().fold(0usize, |n, &c| (n << 6) | (c - 63) as usize);
            (n, 8)
        } else {
            if b.len() < 4 {
                return Err(fail(b.len(), "truncated 4-byte order header"));
            }
            let n = b[1..4].iter().fold(0usize, |n, &c| (n << 6) | (c - 63) as usize);
            (n, 4)
        }
    } else {
        ((b[0] - 63) as usize, 1)
    };
    if n == 0 {
        return Err(fail(0, "empty graph (n = 0) not supported"));
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(fail(0, &format!("order {n} exceeds supported maximum 64")));
    }
    let nbits = n * (n - 1) / 2;
    let expect = nbits.div_ceil(6);
    let body = &b[body_start..];
    if body.len() != expect {
        return Err(fail(
            body_start + body.len().min(expect),
            &format!("expected {expect} body characters, found {}", body.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut t = 0;
    for (ci, &c) in body.iter().enumerate() {
        let bits = c - 63;
        for k in 0..6 {
            let bit = bits >> (5 - k) & 1;
            if t < nbits {
                if bit == 1 {
                    let (i, j) = pair_at(t);
                    g = g.with_edge(i, j)?;
                }
            } else if bit == 1 {
                return Err(fail(body_start + ci, "nonzero padding bits"));
            }
            t += 1;
        }
    }
    Ok(g)
}

/// Column-major upper-triangle position `t` -> pair `(i, j)`, `i < j`.
fn pair_at(mut t: usize) -> (usize, usize) {
    let mut j = 1;
    while t >= j {
        t -= j;
        j += 1;
    }
    (t, j)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parse the edge-list format. Errors carry 1-based line numbers.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let fail = |line: usize, msg: String| Error::EdgeList { line, msg };
    let mut data = text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    });
    let (ln, header) = data
        .next()
        .ok_or_else(|| fail(1, "missing header line \"n m\"".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| fail(ln, format!("bad vertex count in header {header:?}")))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| fail(ln, format!("bad edge count in header {header:?}")))?;
    if parts.next().is_some() {
        return Err(fail(ln, format!("trailing tokens in header {header:?}")));
    }
    let mut g = Graph::empty(n).map_err(|e| fail(ln, e.to_string()))?;
    let mut seen = 0;
    for (ln, line) in data {
        if seen == m {
            return Err(fail(ln, format!("more than {m} edge lines")));
        }
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| fail(ln, format!("bad edge line {line:?}")))?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| fail(ln, format!("bad edge line {line:?}")))?;
        if parts.next().is_some() {
            return Err(fail(ln, format!("trailing tokens in edge line {line:?}")));
        }
        g = g.with_edge(u, v).map_err(|e| fail(ln, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(fail(
            text.lines().count(),
            format!("header announced {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    /// One graph6 string per line.
    Graph6Lines,
    /// A single edge-list graph.
    EdgeList,
}

/// Lines starting with a digit or `#` mean edge list, anything else graph6.
pub fn detect_format(text: &str) -> InputFormat {
    for line in text.lines() {
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        let c = t.chars().next().unwrap();
        return if c.is_ascii_digit() || c == '#' {
            InputFormat::EdgeList
        } else {
            InputFormat::Graph6Lines
        };
    }
    InputFormat::Graph6Lines
}

/// Parse a whole input file in its detected format. Each entry keeps the
/// 1-based line where the graph started so failures stay reportable.
pub fn parse_graph_file(text: &str) -> Vec<(usize, Result<Graph>)> {
    match detect_format(text) {
        InputFormat::EdgeList => vec![(1, parse_edge_list(text))],
        InputFormat::Graph6Lines => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| (i + 1, parse_graph6(l.trim())))
            .collect(),
    }
}
