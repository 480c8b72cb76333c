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

//! Exact tools for locating-dominating sets.
//!
//! The crate computes the location-domination number of a graph and of its
//! complement, builds the edge-labelled graph associated with a
//! distinguishing set, decides when a connected bipartite graph has a
//! complement needing one more vertex in every locating-dominating set, and
//! generates the graph families used to check all of the above.

pub mod assoc;
pub mod bipartite;
pub mod census;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod ld;
pub mod verify;
pub mod vertex_set;

pub use error::{AnalysisError, AssocError, FamilyError, GraphError, LdError, ParseError};
pub use graph::{Bipartition, Graph, TwinKind, TwinPair};
pub use vertex_set::{VertexSet, MAX_VERTICES};
