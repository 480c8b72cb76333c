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

//! The edge-labelled graph associated with a distinguishing set.
//!
//! Given a distinguishing set `S` of `G`, the associated graph `G^S` has the
//! vertices of `V \ S`. Two of them are joined when their traces on `S`
//! differ in exactly one element `u`, and the edge is labelled `u`. The
//! *level* of a vertex is the size of its trace, so every edge joins
//! consecutive levels.
//!
//! Vertex indices are those of the base graph throughout.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::AssocError;
use crate::graph::Graph;
use crate::ld::{trace, undistinguished_pair};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LabeledEdge {
    pub x: usize,
    pub y: usize,
    pub label: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedGraph {
    order: usize,
    base: VertexSet,
    vertices: VertexSet,
    traces: Vec<VertexSet>,
    edges: Vec<LabeledEdge>,
}

impl AssociatedGraph {
    /// Builds `G^S`; `s` must distinguish every pair outside it.
    pub fn build(g: &Graph, s: VertexSet) -> Result<Self, AssocError> {
        let s = s & g.vertices();
        if let Some((x, y)) = undistinguished_pair(g, s) {
            return Err(AssocError::NotDistinguishing { x, y });
        }
        let vertices = g.vertices() - s;
        let traces: Vec<VertexSet> = (0..g.order())
            .map(|v| if vertices.contains(v) { trace(g, v, s) } else { VertexSet::EMPTY })
            .collect();
        let mut edges = Vec::new();
        for x in vertices {
            for y in vertices.above(x) {
                let diff = traces[x] ^ traces[y];
                if diff.len() == 1 {
                    edges.push(LabeledEdge {
                        x,
                        y,
                        label: diff.first().unwrap(),
                    });
                }
            }
        }
        Ok(AssociatedGraph {
            order: g.order(),
            base: s,
            vertices,
            traces,
            edges,
        })
    }

    /// Order of the base graph.
    pub fn base_order(&self) -> usize {
        self.order
    }

    /// The distinguishing set `S`.
    pub fn base(&self) -> VertexSet {
        self.base
    }

    /// `k = |S|`, the top level.
    pub fn k(&self) -> usize {
        self.base.len()
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn edges(&self) -> &[LabeledEdge] {
        &self.edges
    }

    pub fn trace(&self, x: usize) -> VertexSet {
        self.traces[x]
    }

    pub fn level(&self, x: usize) -> usize {
        self.traces[x].len()
    }

    /// Vertices grouped by level `0..=k`.
    pub fn levels(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; self.k() + 1];
        for x in self.vertices {
            out[self.level(x)].insert(x);
        }
        out
    }

    /// Label of the edge `xy`, if present.
    pub fn label_between(&self, x: usize, y: usize) -> Option<usize> {
        if !self.vertices.contains(x) || !self.vertices.contains(y) {
            return None;
        }
        let diff = self.traces[x] ^ self.traces[y];
        (diff.len() == 1).then(|| diff.first().unwrap())
    }

    /// Plain (unlabelled) view of the edges on the base vertex indices.
    pub fn as_graph(&self) -> Graph {
        edge_graph(self.order, &self.edges)
    }

    /// Number of edges carrying each label of `S` (zero counts included).
    pub fn label_multiplicity(&self) -> BTreeMap<usize, usize> {
        let mut counts: BTreeMap<usize, usize> = self.base.iter().map(|u| (u, 0)).collect();
        for e in &self.edges {
            *counts.entry(e.label).or_default() += 1;
        }
        counts
    }

    /// `H_{S'}`: the edges whose label lies in `s_prime`.
    pub fn label_subgraph(&self, s_prime: VertexSet) -> Result<LabelSubgraph<'_>, AssocError> {
        if s_prime.is_empty() {
            return Err(AssocError::EmptySelection);
        }
        if let Some(u) = (s_prime - self.base).first() {
            return Err(AssocError::LabelOutsideBase(u));
        }
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| s_prime.contains(e.label))
            .collect();
        Ok(LabelSubgraph::new(self, s_prime, edges))
    }

    /// Subgraph spanned by the edges at the given positions of [`Self::edges`].
    /// Its label selection is the set of labels those edges carry.
    pub fn edge_subgraph(&self, positions: &[usize]) -> LabelSubgraph<'_> {
        let mut edges: Vec<LabeledEdge> = positions.iter().map(|&i| self.edges[i]).collect();
        edges.sort_unstable();
        edges.dedup();
        let labels = edges.iter().map(|e| e.label).collect();
        LabelSubgraph::new(self, labels, edges)
    }

    /// Checks that every cycle carries each label an even number of times.
    ///
    /// Label parity is additive over the cycle space, so it suffices to check
    /// the fundamental cycles of a spanning forest: give each vertex the
    /// XOR of the labels on its tree path, then every edge must close up.
    pub fn parity_audit(&self) -> bool {
        let g = self.as_graph();
        let mut potential = vec![None::<VertexSet>; self.order];
        for root in self.vertices {
            if potential[root].is_some() {
                continue;
            }
            potential[root] = Some(VertexSet::EMPTY);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let pv = potential[v].unwrap();
                for u in g.neighbors(v) {
                    if potential[u].is_none() {
                        let label = self.label_between(v, u).unwrap();
                        potential[u] = Some(pv ^ VertexSet::singleton(label));
                        queue.push_back(u);
                    }
                }
            }
        }
        self.edges.iter().all(|e| {
            let closing = potential[e.x].unwrap() ^ potential[e.y].unwrap();
            closing == VertexSet::singleton(e.label)
        })
    }

    /// Audits a path climbing one level per step: its labels must be pairwise
    /// distinct, and each label must belong to the trace of every later vertex.
    pub fn path_label_audit(&self, path: &[usize]) -> Result<bool, AssocError> {
        if let Some(&x) = path.iter().find(|&&x| !self.vertices.contains(x)) {
            return Err(AssocError::UnknownVertex(x));
        }
        let mut labels = Vec::with_capacity(path.len().saturating_sub(1));
        for step in path.windows(2) {
            let (a, b) = (step[0], step[1]);
            let label = self
                .label_between(a, b)
                .ok_or(AssocError::NotAnEdge(a, b))?;
            if self.level(b) != self.level(a) + 1 {
                return Err(AssocError::NotMonotone(a, b));
            }
            labels.push(label);
        }
        let distinct = labels.iter().collect::<VertexSet>().len() == labels.len();
        let carried = labels.iter().enumerate().all(|(i, &label)| {
            path[i + 1..]
                .iter()
                .all(|&later| self.traces[later].contains(label))
        });
        Ok(distinct && carried)
    }
}

/// Edges of `G^S` restricted to a label selection, plus component structure.
///
/// Vertices of the parent with no selected edge are kept as singleton
/// components; [`LabelSubgraph::incident_vertices`] gives the edge-induced
/// vertex set instead.
#[derive(Debug, Clone)]
pub struct LabelSubgraph<'a> {
    parent: &'a AssociatedGraph,
    selected: VertexSet,
    edges: Vec<LabeledEdge>,
    components: Vec<VertexSet>,
}

impl<'a> LabelSubgraph<'a> {
    fn new(parent: &'a AssociatedGraph, selected: VertexSet, edges: Vec<LabeledEdge>) -> Self {
        let components = edge_graph(parent.order, &edges)
            .connected_components()
            .into_iter()
            .map(|c| c & parent.vertices)
            .filter(|c| !c.is_empty())
            .collect();
        LabelSubgraph {
            parent,
            selected,
            edges,
            components,
        }
    }

    pub fn parent(&self) -> &'a AssociatedGraph {
        self.parent
    }

    pub fn selected_labels(&self) -> VertexSet {
        self.selected
    }

    pub fn edges(&self) -> &[LabeledEdge] {
        &self.edges
    }

    /// Components over all parent vertices, ordered by smallest member.
    pub fn components(&self) -> &[VertexSet] {
        &self.components
    }

    /// Vertices touched by at least one selected edge.
    pub fn incident_vertices(&self) -> VertexSet {
        self.edges
            .iter()
            .fold(VertexSet::EMPTY, |acc, e| acc.with(e.x).with(e.y))
    }

    /// Components that contain an edge.
    pub fn incident_components(&self) -> Vec<VertexSet> {
        let incident = self.incident_vertices();
        self.components
            .iter()
            .copied()
            .filter(|c| !c.is_disjoint(incident))
            .collect()
    }

    pub fn as_graph(&self) -> Graph {
        edge_graph(self.parent.order, &self.edges)
    }

    /// True when all members of each component share the same trace on
    /// `S \ S'`. That common trace is then the restriction of the trace of a
    /// lowest-level member, which is reported by [`Self::component_traces`].
    pub fn component_trace_check(&self) -> bool {
        let rest = self.parent.base - self.selected;
        self.components.iter().all(|c| {
            let mut members = c.iter().map(|x| self.parent.trace(x) & rest);
            let first = members.next();
            members.all(|t| Some(t) == first)
        })
    }

    /// For every component, the trace on `S \ S'` of its lowest-level member
    /// (smallest index on ties).
    pub fn component_traces(&self) -> Vec<VertexSet> {
        let rest = self.parent.base - self.selected;
        self.components
            .iter()
            .map(|c| {
                let lowest = c
                    .iter()
                    .min_by_key(|&x| (self.parent.level(x), x))
                    .unwrap();
                self.parent.trace(lowest) & rest
            })
            .collect()
    }

    /// Component, cycle and excess counts of the edge-induced subgraph.
    pub fn cactus_stats(&self) -> CactusStats {
        let vertices = self.incident_vertices().len();
        let edges = self.edges.len();
        let cc = self.incident_components().len();
        // cycle rank |E| - |V| + cc
        let cy = edges + cc - vertices;
        CactusStats {
            vertices,
            edges,
            cc,
            cy,
            ex: edges as i64 - 4 * cy as i64,
            is_cactus: self.as_graph().is_cactus_forest(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CactusStats {
    pub vertices: usize,
    pub edges: usize,
    pub cc: usize,
    pub cy: usize,
    pub ex: i64,
    pub is_cactus: bool,
}

fn edge_graph(order: usize, edges: &[LabeledEdge]) -> Graph {
    let mut g = Graph::empty(order).expect("order already validated");
    for e in edges {
        g.add_edge(e.x, e.y).expect("edge endpoints are distinct base vertices");
    }
    g
}

/// Bracketed trace such as `[134]`; elements are comma-separated once any
/// of them needs two digits.
pub fn trace_label(t: VertexSet) -> String {
    let sep = if t.last().is_some_and(|v| v >= 10) { "," } else { "" };
    let body: Vec<String> = t.iter().map(|v| v.to_string()).collect();
    format!("[{}]", body.join(sep))
}
