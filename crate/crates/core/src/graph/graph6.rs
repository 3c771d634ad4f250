//! graph6 encoding.
//!
//! Size prefix `63 + n` for `n ≤ 62`, or `~` followed by three 6-bit bytes
//! (accepted on parse only). The upper triangle is packed column by column,
//! `x(0,1), x(0,2), x(1,2), x(0,3), …`, six bits per byte, most significant
//! first, each byte offset by 63. Padding bits must be zero.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_SHORT: usize = 62;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(err(base, "empty input"));
    }
    if let Some(i) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(base + i, format!("byte 0x{:02x} is outside 63..=126", bytes[i])));
    }
    let (n, start) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(err(base + 1, "8-byte size form is not supported"));
    } else if bytes.len() < 4 {
        return Err(err(base + bytes.len(), "truncated 4-byte size prefix"));
    } else {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    if n == 0 {
        return Err(err(base, "graphs of order 0 are not supported"));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    let data = &bytes[start..];
    if data.len() != expected {
        return Err(err(
            base + start + data.len().min(expected),
            format!("expected {expected} data bytes for n={n}, found {}", data.len()),
        ));
    }
    let mut g = Graph::empty(n).map_err(|e| err(base, e.to_string()))?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                g.insert(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad = 6 - nbits % 6;
        if (data[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(err(base + start + expected - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Canonical graph6 text (no header, no newline). Only `n ≤ 62` is emitted.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_SHORT {
        return Err(Error::InvalidParameters(format!(
            "graph6 output is limited to n ≤ {MAX_SHORT}, got {n}"
        )));
    }
    let nbits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(63 + acc);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push(63 + (acc << (6 - k % 6)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
