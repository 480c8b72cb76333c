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

//! Reading graphs, writing reports.

pub mod dot;
pub mod edge_list;
pub mod graph6;

use serde::Serialize;

use crate::error::ParseError;
use crate::graph::Graph;

pub use dot::export_dot;

/// Version of the JSON report layout written by [`RunReport`].
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub format: GraphFormat,
    pub graph: Graph,
    pub name: Option<String>,
}

/// Reads one or more graphs from text.
///
/// A first content line made of two integers selects the edge-list format
/// (one graph per text); anything else is read as graph6, one graph per
/// non-empty line.
pub fn parse_graphs(text: &str) -> Result<Vec<GraphDocument>, ParseError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    let is_edge_list = first.is_some_and(|l| {
        let fields: Vec<&str> = l.split_whitespace().collect();
        fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok())
    });
    if is_edge_list {
        return Ok(vec![GraphDocument {
            format: GraphFormat::EdgeList,
            graph: edge_list::decode(text)?,
            name: None,
        }]);
    }
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            Ok(GraphDocument {
                format: GraphFormat::Graph6,
                graph: graph6::decode(l)?,
                name: Some(format!("line {}", i + 1)),
            })
        })
        .collect()
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => graph6::encode(g) + "\n",
        GraphFormat::EdgeList => edge_list::encode(g),
    }
}

/// Envelope for every JSON report: schema version, the command that
/// produced it, and one entry per input graph or per suite.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport<T: Serialize> {
    pub schema_version: u32,
    pub command: String,
    pub entries: Vec<T>,
}

impl<T: Serialize> RunReport<T> {
    pub fn new(command: impl Into<String>, entries: Vec<T>) -> Self {
        RunReport {
            schema_version: REPORT_SCHEMA_VERSION,
            command: command.into(),
            entries,
        }
    }
}
