//! graph6 small format (`n <= 62`).
//!
//! Byte 0 is `n + 63`. The upper-triangle bits follow in column order
//! `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`, packed big-endian into
//! 6-bit groups, zero-padded, each group offset by 63.

use std::io::BufRead;

use thiserror::Error;

use super::Graph;

/// Optional header nauty writes in front of graph6 files.
pub const HEADER: &str = ">>graph6<<";

/// Largest order representable in the small format.
pub const MAX_N: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid header byte {0:#04x}")]
    BadHeader(u8),
    #[error("long-form graph6 (n > 62) is not supported")]
    LongFormat,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated payload: expected {expected} bytes, found {actual}")]
    Truncated { expected: usize, actual: usize },
    #[error("trailing data: expected {expected} payload bytes, found {actual}")]
    TrailingData { expected: usize, actual: usize },
    #[error("nonzero padding bits in the last byte")]
    NonzeroPadding,
    #[error("graph on {0} vertices does not fit the small graph6 format")]
    TooLarge(usize),
    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Graph6Error> },
    #[error("I/O error: {0}")]
    Io(String),
}

fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

pub fn write(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_N {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push((n + 63) as u8);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("ASCII"))
}

/// Parses one graph6 line. Surrounding whitespace and a leading
/// `>>graph6<<` header are ignored.
pub fn parse(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&head, payload) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if head == 126 {
        return Err(Graph6Error::LongFormat);
    }
    if !(64..126).contains(&head) {
        return Err(Graph6Error::BadHeader(head));
    }
    let n = (head - 63) as usize;
    if let Some((offset, &byte)) = payload.iter().enumerate().find(|(_, b)| !(63..=126).contains(*b)) {
        return Err(Graph6Error::InvalidByte { offset: offset + 1, byte });
    }
    let expected = payload_len(n);
    if payload.len() < expected {
        return Err(Graph6Error::Truncated { expected, actual: payload.len() });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingData { expected, actual: payload.len() });
    }
    let bits = n * (n - 1) / 2;
    let pad = expected * 6 - bits;
    if pad > 0 && (payload[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::NonzeroPadding);
    }
    let mut g = Graph::empty(n).expect("n >= 1");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = payload[k / 6] - 63;
            if (group >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Reads one graph per line, skipping blank lines. Errors carry the
/// 1-based line number.
pub fn read_all(reader: impl BufRead) -> Result<Vec<Graph>, Graph6Error> {
    let mut graphs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Graph6Error::Io(e.to_string()))?;
        let body = line.trim();
        let body = body.strip_prefix(HEADER).unwrap_or(body);
        if body.is_empty() {
            continue;
        }
        let g = parse(body).map_err(|e| Graph6Error::AtLine { line: idx + 1, source: Box::new(e) })?;
        graphs.push(g);
    }
    Ok(graphs)
}
