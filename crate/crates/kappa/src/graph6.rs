//! graph6 encoding and decoding (McKay's format): 6-bit packed upper
//! triangle in column order, optional `>>graph6<<` header.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decode one graph from a graph6 line (trailing newline tolerated).
pub fn decode(text: &str) -> Result<Graph> {
    let mut s = text.trim_end_matches(['\n', '\r']);
    let mut base = 0;
    if let Some(rest) = s.strip_prefix(HEADER) {
        s = rest;
        base = HEADER.len();
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(err(base, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte 0x{b:02x} outside graph6 alphabet")));
        }
    }

    let (n, body_start) = decode_order(bytes, base)?;
    let pair_bits = n * n.saturating_sub(1) / 2;
    let body = &bytes[body_start - base..];
    let expected = pair_bits.div_ceil(6);
    if body.len() != expected {
        return Err(err(
            base + bytes.len().min(body_start - base + body.len()),
            format!(
                "expected {expected} adjacency bytes for n={n}, found {}",
                body.len()
            ),
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    // padding bits must be zero
    if pair_bits > 0 {
        let last = body[expected - 1] - 63;
        let used = pair_bits - (expected - 1) * 6;
        if last & crate::bitset::low_mask(6 - used) as u8 != 0 {
            return Err(err(body_start + expected - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edge_list(n, &edges)
}

fn decode_order(bytes: &[u8], base: usize) -> Result<(usize, usize)> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, base + 1));
    }
    if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(err(base + bytes.len(), "truncated 3-byte order field"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        return Ok((n, base + 4));
    }
    if bytes.len() < 8 {
        return Err(err(base + bytes.len(), "truncated 6-byte order field"));
    }
    let n = bytes[2..8]
        .iter()
        .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
    Ok((n, base + 8))
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut used = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parse a file of graph6 lines (one graph per line; blank lines skipped).
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(decode)
        .collect()
}
