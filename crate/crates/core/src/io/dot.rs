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

//! Graphviz rendering of associated graphs.
//!
//! Levels are stacked bottom to top (`rankdir=BT`), one rank per level
//! `0..=k`, held in order by an invisible chain of level anchors. Nodes are
//! named `v<index>` and labelled with their bracketed trace; edges carry
//! their label.

use std::fmt::Write;

use crate::assoc::{trace_label, AssociatedGraph};

pub fn export_dot(ag: &AssociatedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph associated {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    let levels = ag.levels();
    for (j, members) in levels.iter().enumerate() {
        write!(out, "  {{ rank=same; level_{j} [style=invis];").unwrap();
        for x in members.iter() {
            write!(out, " v{x} [label=\"{}\"];", trace_label(ag.trace(x))).unwrap();
        }
        writeln!(out, " }}").unwrap();
    }
    for j in 1..levels.len() {
        writeln!(out, "  level_{} -- level_{j} [style=invis];", j - 1).unwrap();
    }
    for e in ag.edges() {
        writeln!(out, "  v{} -- v{} [label=\"{}\"];", e.x, e.y, e.label).unwrap();
    }
    out.push_str("}\n");
    out
}
