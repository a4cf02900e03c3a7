//! graph6 short form, n <= 62.
//!
//! Layout: one header byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), packed
//! big-endian six bits per byte, each byte offset by 63, zero padded.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

/// Largest vertex count the short form can encode.
pub const MAX_GRAPH6_VERTICES: usize = 62;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Error::Graph6(format!(
            "cannot encode {n} vertices in short form (max {MAX_GRAPH6_VERTICES})"
        )));
    }
    let mut out = String::with_capacity(1 + body_len(n));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim().as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(63..=126).contains(&head) {
        return Err(Error::Graph6(format!("malformed header byte {head:#04x}")));
    }
    if head == 126 {
        return Err(Error::Graph6(format!(
            "long-form header: only n <= {MAX_GRAPH6_VERTICES} is supported"
        )));
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(Error::Graph6("graph with zero vertices".into()));
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "bit field has {} bytes, expected {expected} for n={n}",
            body.len()
        )));
    }
    let mut rows = vec![0u64; n];
    let total = n * (n - 1) / 2;
    let mut k = 0;
    let (mut i, mut j) = (0usize, 1usize);
    for &c in body {
        if !(63..=126).contains(&c) {
            return Err(Error::Graph6(format!("malformed byte {c:#04x}")));
        }
        let six = c - 63;
        for shift in (0..6).rev() {
            let set = (six >> shift) & 1 == 1;
            if k >= total {
                if set {
                    return Err(Error::Graph6("non-zero padding bits".into()));
                }
                continue;
            }
            if set {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Graph::from_adjacency(rows)
}
