//! graph6 encoding of simple graphs.
//!
//! Each byte carries six bits offset by 63. The order is written as one byte
//! for `n <= 62`, as `126` plus three bytes up to 258047, and as `126 126`
//! plus six bytes beyond that. Adjacency bits follow in upper-triangle,
//! column-major order: `(0,1), (0,2), (1,2), (0,3), ...`.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(b) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(malformed(format!("byte {b} outside 63..=126")));
    }
    let (n, rest) = decode_order(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if rest.len() != need {
        return Err(malformed(format!(
            "order {n} needs {need} adjacency bytes, found {}",
            rest.len()
        )));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if need > 0 && bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if (rest[need - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Ok(g)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let six = |s: &[u8]| s.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    match bytes {
        [] => Err(malformed("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(malformed("truncated 8-byte order"));
            }
            Ok((six(&rest[..6]), &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed("truncated 4-byte order"));
            }
            Ok((six(&rest[..3]), &rest[3..]))
        }
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    let push6 = |out: &mut Vec<u8>, count: usize| {
        for s in (0..count).rev() {
            out.push(((n >> (6 * s)) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push6(out, 3);
    } else {
        out.push(126);
        out.push(126);
        push6(out, 6);
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
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
