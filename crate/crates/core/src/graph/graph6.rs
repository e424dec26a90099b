//! graph6 encoding (nauty's `showg` format, without the optional `>>graph6<<` header).

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;

fn push_order(out: &mut Vec<u8>, n: usize) {
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + BIAS));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + BIAS));
    }
}

/// Encodes the graph (labels are dropped). No trailing newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    push_order(&mut out, n);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string. Surrounding ASCII whitespace is ignored.
pub fn decode_graph6(input: &[u8]) -> Result<Graph> {
    let start = input
        .iter()
        .position(|b| !b.is_ascii_whitespace())
        .unwrap_or(input.len());
    let end = input
        .iter()
        .rposition(|b| !b.is_ascii_whitespace())
        .map_or(start, |p| p + 1);
    let bytes = &input[start..end];
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset: start + offset,
        reason: reason.to_string(),
    };
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(
            pos,
            &format!("byte 0x{:02x} outside the graph6 alphabet", bytes[pos]),
        ));
    }
    let value = |range: std::ops::Range<usize>| {
        bytes[range]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | usize::from(b - BIAS))
    };
    let (n, header) = match bytes {
        [] => return Err(err(0, "empty input")),
        [126, 126, ..] if bytes.len() >= 8 => (value(2..8), 8),
        [126, 126, ..] => return Err(err(bytes.len(), "truncated 8-byte order header")),
        [126, ..] if bytes.len() >= 4 => (value(1..4), 4),
        [126, ..] => return Err(err(bytes.len(), "truncated 4-byte order header")),
        [b, ..] => (usize::from(b - BIAS), 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = header + bits.div_ceil(6);
    if bytes.len() != expected {
        let reason = format!(
            "expected {expected} bytes for {n} vertices, found {}",
            bytes.len()
        );
        return Err(err(bytes.len().min(expected), &reason));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[header + k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = bytes[expected - 1] - BIAS;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(expected - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}
