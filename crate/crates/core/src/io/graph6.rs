// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! The graph6 text encoding.
//!
//! A graph of order `n` is written as its size header followed by the upper
//! triangle of the adjacency matrix, column by column (`(0,1), (0,2), (1,2),
//! (0,3), ...`), packed six bits per byte with 63 added to each byte.

use crate::error::ParseError;
use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Graph6 {
        offset,
        message: message.into(),
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are ignored; byte offsets in errors refer to the trimmed text.
pub fn decode(line: &str) -> Result<Graph, ParseError> {
    let text = line.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(pos, format!("byte {} outside 63..=126", bytes[pos])));
    }
    let six = |i: usize| -> Result<usize, ParseError> {
        bytes
            .get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| err(i, "truncated size header"))
    };
    let (n, mut pos) = if bytes[0] != 126 {
        (six(0)?, 1)
    } else if bytes.get(1) != Some(&126) {
        (six(1)? << 12 | six(2)? << 6 | six(3)?, 4)
    } else {
        let mut n = 0;
        for i in 2..8 {
            n = n << 6 | six(i)?;
        }
        (n, 8)
    };
    if n > MAX_VERTICES {
        return Err(err(0, format!("order {n} exceeds {MAX_VERTICES}")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() < needed {
        return Err(err(
            bytes.len(),
            format!("expected {needed} data bytes for order {n}, found {}", body.len()),
        ));
    }
    if body.len() > needed {
        return Err(err(pos + needed, "trailing bytes after graph data"));
    }

    let mut g = Graph::empty(n).map_err(|e| err(0, e.to_string()))?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j).expect("indices are in range");
            }
            k += 1;
        }
    }
    let pad = needed * 6 - bits;
    if pad > 0 {
        pos += needed - 1;
        if (bytes[pos] - 63) & ((1 << pad) - 1) != 0 {
            return Err(err(pos, "nonzero padding bits"));
        }
    }
    Ok(g)
}
