//! graph6 and edge-list text formats.

use crate::error::{Error, Result};
use crate::graph::Graph;

const G6_HEADER: &str = ">>graph6<<";

fn perr(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Decodes a single graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut start = 0;
    let mut body = text.strip_suffix('\n').unwrap_or(text);
    body = body.strip_suffix('\r').unwrap_or(body);
    if let Some(rest) = body.strip_prefix(G6_HEADER) {
        body = rest;
        start = G6_HEADER.len();
    }
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(perr(start, "empty graph6 input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(perr(start + i, format!("byte {b:#04x} outside graph6 range 63..=126")));
        }
    }
    let (n, header_len) = decode_size(bytes).map_err(|(off, msg)| perr(start + off, msg))?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = header_len + bits.div_ceil(6);
    if bytes.len() < expected {
        return Err(perr(
            start + bytes.len(),
            format!("truncated: expected {expected} bytes for n = {n}, found {}", bytes.len()),
        ));
    }
    if bytes.len() > expected {
        return Err(perr(start + expected, "trailing bytes after graph6 data"));
    }
    let data = &bytes[header_len..];
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
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
    let padded = data.len() * 6;
    if (k..padded).any(bit) {
        return Err(perr(start + expected - 1, "nonzero padding bits"));
    }
    Graph::from_edges(n, edges)
}

fn decode_size(bytes: &[u8]) -> std::result::Result<(usize, usize), (usize, String)> {
    let take = |from: usize, count: usize| -> std::result::Result<usize, (usize, String)> {
        if bytes.len() < from + count {
            return Err((bytes.len(), "truncated size header".into()));
        }
        Ok(bytes[from..from + count]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, 1));
    }
    if bytes.len() > 1 && bytes[1] == 126 {
        Ok((take(2, 6)?, 8))
    } else {
        Ok((take(1, 3)?, 4))
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
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
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// One parse result per non-empty line, tagged with its 1-based line number.
pub fn parse_graph6_batch(text: &str) -> Vec<(usize, Result<Graph>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, parse_graph6(l.trim())))
        .collect()
}

/// Vertex count on the first line, then whitespace-separated 0-based pairs.
/// Lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        if !line.trim_start().starts_with('#') {
            let mut pos = 0;
            for tok in line.split_whitespace() {
                let at = line[pos..].find(tok).unwrap() + pos;
                tokens.push((offset + at, tok));
                pos = at + tok.len();
            }
        }
        offset += line.len();
    }
    let Some(&(off, first)) = tokens.first() else {
        return Err(perr(0, "empty edge list"));
    };
    let num = |off: usize, tok: &str| {
        tok.parse::<usize>()
            .map_err(|_| perr(off, format!("expected a non-negative integer, found {tok:?}")))
    };
    let n = num(off, first)?;
    let rest = &tokens[1..];
    if rest.len() % 2 != 0 {
        let (off, _) = rest[rest.len() - 1];
        return Err(perr(off, "dangling vertex without a partner"));
    }
    let mut edges = Vec::with_capacity(rest.len() / 2);
    for pair in rest.chunks(2) {
        edges.push((num(pair[0].0, pair[0].1)?, num(pair[1].0, pair[1].1)?));
    }
    Graph::from_edges(n, edges)
}

/// Edge-list if the first meaningful line is a bare integer, graph6 otherwise.
pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.parse::<usize>().is_ok() => parse_edge_list(text),
        Some(l) => parse_graph6(l),
        None => Err(perr(0, "empty input")),
    }
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
