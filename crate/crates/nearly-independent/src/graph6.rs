//! graph6 encoding and decoding.
//!
//! The standard ASCII format: a header encoding the order (one byte `63+n`
//! for `n <= 62`, or `~` followed by three bytes for larger orders), then the
//! upper-triangle adjacency bits in column-major order, six bits per byte,
//! each byte offset by 63. Orders above 64 are rejected by this crate even
//! though the format itself allows them.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 header")]
    BadHeader,
    #[error("graph6 order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    UnsupportedOrder(usize),
    #[error("graph6 data truncated: expected {expected} data bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("unexpected trailing bytes after graph6 data")]
    TrailingData,
    #[error("invalid graph6 byte {0:#x}")]
    InvalidByte(u8),
    #[error("nonzero padding bits in graph6 data")]
    NonzeroPadding,
}

/// Column-major upper-triangle pair order used by the format:
/// (0,1), (0,2), (1,2), (0,3), ...
fn pair_count(n: usize) -> usize {
    n * (n.saturating_sub(1)) / 2
}

/// Encodes a graph as a graph6 string.
pub fn emit(g: &Graph) -> String {
    let n = g.vertex_count();
    debug_assert!(n <= MAX_VERTICES);
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        // long form: '~' then three 6-bit groups of an 18-bit order
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 string. Accepts an optional `>>graph6<<` prefix.
pub fn parse(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader);
        }
        if bytes[1] == 126 {
            // 36-bit order form is always out of range here
            return Err(Graph6Error::UnsupportedOrder(usize::MAX));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            if !(63..=126).contains(&b) {
                return Err(Graph6Error::BadHeader);
            }
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4)
    } else {
        let b = bytes[0];
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadHeader);
        }
        ((b - 63) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let bits_needed = pair_count(n);
    let data_bytes = bits_needed.div_ceil(6);
    let got = bytes.len() - pos;
    if got < data_bytes {
        return Err(Graph6Error::Truncated { expected: data_bytes, got });
    }
    if got > data_bytes {
        return Err(Graph6Error::TrailingData);
    }

    let mut adj = vec![0u64; n];
    let mut bit_index = 0usize;
    let mut pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    while pos < bytes.len() {
        let b = bytes[pos];
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte(b));
        }
        let group = b - 63;
        for shift in (0..6).rev() {
            let bit = (group >> shift) & 1;
            if bit_index < bits_needed {
                let (i, j) = pairs.next().expect("pair iterator tracks bit count");
                if bit == 1 {
                    adj[i] |= 1u64 << j;
                    adj[j] |= 1u64 << i;
                }
            } else if bit == 1 {
                return Err(Graph6Error::NonzeroPadding);
            }
            bit_index += 1;
        }
        pos += 1;
    }
    Ok(Graph::from_adjacency(adj).expect("decoded adjacency is symmetric by construction"))
}
