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

use thiserror::Error;

use crate::vertex_set::MAX_VERTICES;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("edge ({i}, {j}) references a vertex outside 0..{n}")]
    VertexOutOfRange { i: usize, j: usize, n: usize },
    #[error("edge ({v}, {v}) is a self-loop")]
    SelfLoop { v: usize },
    #[error("graph is not connected")]
    NotConnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LdError {
    #[error("the set does not distinguish vertices {x} and {y}")]
    NotDistinguishing { x: usize, y: usize },
    #[error("graph has {n} vertices, above the exhaustive-search cap of {cap}; use the bounded search")]
    OracleCapExceeded { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssocError {
    #[error("the set does not distinguish vertices {x} and {y}")]
    NotDistinguishing { x: usize, y: usize },
    #[error("label selection is empty")]
    EmptySelection,
    #[error("label {0} is not a member of the base set")]
    LabelOutsideBase(usize),
    #[error("vertex {0} is not a vertex of the associated graph")]
    UnknownVertex(usize),
    #[error("vertices {0} and {1} are not adjacent in the associated graph")]
    NotAnEdge(usize, usize),
    #[error("path step {0} -> {1} does not climb exactly one level")]
    NotMonotone(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ld(#[from] LdError),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("bipartition does not match the graph")]
    BadBipartition,
    #[error("the feasibility window needs r >= 3, got r = {0}")]
    SmallSide(usize),
    #[error("the set is not an LD-code of the graph")]
    NotACode,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: {requirement}")]
    BadParameters {
        family: &'static str,
        requirement: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("graph6: {message} at byte {offset}")]
    Graph6 { offset: usize, message: String },
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
}
