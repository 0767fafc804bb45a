//! graph6 encoding and decoding.
//!
//! The header encodes `n` (one byte `63 + n` for `n <= 62`, otherwise the
//! `~`-prefixed long forms). The payload packs the upper triangle of the
//! adjacency matrix column by column, `(0,1), (0,2), (1,2), (0,3), ...`,
//! six bits per byte, each byte offset by 63. Trailing pad bits must be zero.

use crate::error::Graph6Error;
use crate::graph::{Graph, Vertex};

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line into `(n, edges)` without any connectivity check.
pub fn decode(line: &str) -> Result<(usize, Vec<(Vertex, Vertex)>), Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                offset: skip + i,
                byte: b,
            });
        }
    }
    let (n, mut pos) = decode_n(body, skip)?;
    if n == 0 {
        return Err(Graph6Error::NoVertices);
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < pos + need {
        return Err(Graph6Error::Truncated {
            offset: skip + body.len(),
            expected: pos + need,
        });
    }
    if body.len() > pos + need {
        return Err(Graph6Error::TrailingData {
            offset: skip + pos + need,
        });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    if bits % 6 != 0 {
        let last = body[pos + need - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding {
                offset: skip + pos + need - 1,
            });
        }
    }
    pos += need;
    debug_assert_eq!(pos, body.len());
    Ok((n, edges))
}

fn decode_n(body: &[u8], skip: usize) -> Result<(usize, usize), Graph6Error> {
    let take = |from: usize, count: usize| -> Result<usize, Graph6Error> {
        if body.len() < from + count {
            return Err(Graph6Error::Truncated {
                offset: skip + body.len(),
                expected: from + count,
            });
        }
        Ok(body[from..from + count]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    if body[0] != 126 {
        Ok(((body[0] - 63) as usize, 1))
    } else if body.len() > 1 && body[1] == 126 {
        Ok((take(2, 6)?, 8))
    } else {
        Ok((take(1, 3)?, 4))
    }
}

/// Parses one graph6 line into a connected [`Graph`].
pub fn from_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let (n, edges) = decode(line)?;
    Ok(Graph::from_edges(n, edges)?)
}

/// Encodes `g` in graph6 (short form up to 62 vertices, long form beyond).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + (n >> shift & 63) as u8);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + (n >> shift & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(63 + acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(63 + (acc << (6 - k)));
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
