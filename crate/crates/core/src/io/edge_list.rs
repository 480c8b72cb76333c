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

//! Plain edge lists: a first line `n m`, then `m` lines `i j` with 0-based
//! endpoints. Blank lines and lines starting with `#` are skipped; line
//! numbers in errors count every physical line from 1.

use crate::error::{GraphError, ParseError};
use crate::graph::Graph;

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::EdgeList {
        line,
        message: message.into(),
    }
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(err(line, format!("expected two integers, found {} fields", fields.len())));
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| err(line, format!("`{s}` is not a non-negative integer")))
    };
    Ok((parse(fields[0])?, parse(fields[1])?))
}

pub fn decode(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or_else(|| err(1, "missing `n m` header"))?;
    let (n, m) = two_numbers(header_line, header)?;
    let mut g = Graph::empty(n).map_err(|e| err(header_line, e.to_string()))?;
    let mut last = header_line;
    for k in 0..m {
        let (line, body) = lines
            .next()
            .ok_or_else(|| err(last + 1, format!("expected {m} edges, found {k}")))?;
        let (i, j) = two_numbers(line, body)?;
        g.add_edge(i, j).map_err(|e| match e {
            GraphError::VertexOutOfRange { .. } => {
                err(line, format!("edge ({i}, {j}) has an endpoint outside 0..{n}"))
            }
            GraphError::SelfLoop { v } => err(line, format!("self-loop at vertex {v}")),
            other => err(line, other.to_string()),
        })?;
        last = line;
    }
    if let Some((line, _)) = lines.next() {
        return Err(err(line, format!("more than the declared {m} edges")));
    }
    Ok(g)
}

pub fn encode(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}
