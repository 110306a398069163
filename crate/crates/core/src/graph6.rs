//! graph6 text encoding.
//!
//! Order: one byte `n + 63` for `n <= 62`, otherwise `~` followed by three
//! bytes holding 18 bits. Edges: the upper triangle read column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits per byte, each
//! byte offset by 63, zero-padded at the end.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order expressible with the short and medium order prefixes.
pub const MAX_ORDER: usize = 258_047;

fn parse_err<T>(offset: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { offset, message: message.into() })
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    let mut push = |bit: bool, out: &mut Vec<u8>| {
        acc = acc << 1 | bit as u8;
        k += 1;
        if k == 6 {
            out.push(acc + 63);
            acc = 0;
            k = 0;
        }
    };
    for j in 1..n {
        for i in 0..j {
            push(g.has_edge(i, j), &mut out);
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return parse_err(pos, format!("byte 0x{:02x} outside the graph6 range", bytes[pos]));
    }
    let Some(&first) = bytes.first() else {
        return parse_err(0, "empty input");
    };
    let (n, mut at) = if first != 126 {
        ((first - 63) as usize, 1)
    } else {
        if bytes.get(1) == Some(&126) {
            return parse_err(1, "orders above 258047 are not supported");
        }
        if bytes.len() < 4 {
            return parse_err(bytes.len(), "truncated order prefix");
        }
        let n = bytes[1..4].iter().fold(0usize, |a, &b| a << 6 | (b - 63) as usize);
        (n, 4)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &bytes[at..];
    if body.len() != need {
        let offset = at + body.len().min(need);
        return parse_err(offset, format!("expected {need} edge bytes for order {n}, found {}", body.len()));
    }
    let mut g = Graph::try_empty(n).map_err(|e| Error::Parse { offset: 0, message: e.to_string() })?;
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[at + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    if bits % 6 != 0 {
        let last = bytes[at + need - 1] - 63;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            at += need - 1;
            return parse_err(at, "non-zero padding bits");
        }
    }
    Ok(g)
}
