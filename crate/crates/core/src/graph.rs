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

//! Simple undirected graphs stored as one [`VertexSet`] row per vertex.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::GraphError;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Undirected simple graph on the vertices `0..n`.
///
/// Rows are kept symmetric and irreflexive; every constructor goes through
/// [`Graph::new`] or preserves both properties.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(GraphError::VertexOutOfRange { i, j, n });
            }
            if i == j {
                return Err(GraphError::SelfLoop { v: i });
            }
            g.adj[i].insert(j);
            g.adj[j].insert(i);
        }
        Ok(g)
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from adjacency rows, checking symmetry and loops.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let all = VertexSet::full(n);
        for (i, row) in rows.iter().enumerate() {
            if let Some(j) = (*row - all).first() {
                return Err(GraphError::VertexOutOfRange { i, j, n });
            }
            if row.contains(i) {
                return Err(GraphError::SelfLoop { v: i });
            }
        }
        let mut g = Graph::empty(n)?;
        for (i, row) in rows.iter().enumerate() {
            for j in row.iter() {
                g.adj[i].insert(j);
                g.adj[j].insert(i);
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && self.adj[i].contains(j)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| self.adj[i].above(i).iter().map(move |j| (i, j)))
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<(), GraphError> {
        if i >= self.n || j >= self.n {
            return Err(GraphError::VertexOutOfRange { i, j, n: self.n });
        }
        if i == j {
            return Err(GraphError::SelfLoop { v: i });
        }
        self.adj[i].insert(j);
        self.adj[j].insert(i);
        Ok(())
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        if i < self.n && j < self.n {
            self.adj[i].remove(j);
            self.adj[j].remove(i);
        }
    }

    /// `i` and `j` adjacent in the result iff they are distinct and not adjacent here.
    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| all.difference(self.adj[v]).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Copy of the graph with every edge at `v` removed. Vertex indices are
    /// kept, so `v` stays behind as an isolated vertex.
    pub fn isolate(&self, v: usize) -> Graph {
        let mut g = self.clone();
        for u in self.adj[v] {
            g.adj[u].remove(v);
        }
        g.adj[v] = VertexSet::EMPTY;
        g
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in
    /// ascending order of the original indices.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let index: Vec<usize> = keep.to_vec();
        let mut position = [usize::MAX; MAX_VERTICES];
        for (new, &old) in index.iter().enumerate() {
            position[old] = new;
        }
        let adj = index
            .iter()
            .map(|&old| {
                (self.adj[old] & keep)
                    .iter()
                    .map(|u| position[u])
                    .collect()
            })
            .collect();
        Graph {
            n: index.len(),
            adj,
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (i, j) in self.edges() {
            adj[perm[i]].insert(perm[j]);
            adj[perm[j]].insert(perm[i]);
        }
        Graph { n: self.n, adj }
    }

    /// Vertices reachable from `start`.
    pub fn reachable(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = next - seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reachable(0) == self.vertices()
    }

    /// Connected components ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.reachable(v);
            left = left - comp;
            out.push(comp);
        }
        out
    }

    /// Two-colouring of a connected graph.
    ///
    /// Returns `Ok(None)` when an odd cycle exists. The smaller colour class
    /// becomes `U`; on equal sizes `U` is the class holding vertex 0.
    pub fn bipartition(&self) -> Result<Option<Bipartition>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::NotConnected);
        }
        let mut color = vec![u8::MAX; self.n];
        let mut queue = VecDeque::from([0usize]);
        color[0] = 0;
        while let Some(v) = queue.pop_front() {
            for u in self.adj[v] {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return Ok(None);
                }
            }
        }
        let zero: VertexSet = (0..self.n).filter(|&v| color[v] == 0).collect();
        let one = self.vertices() - zero;
        let (u, w) = if one.len() < zero.len() {
            (one, zero)
        } else {
            (zero, one)
        };
        Ok(Some(Bipartition::new_unchecked(u, w)))
    }

    /// Unordered pairs inside `restrict` that are open or closed twins,
    /// sorted by `(u, v)`.
    pub fn twin_pairs(&self, restrict: VertexSet) -> Vec<TwinPair> {
        let members = restrict.to_vec();
        let mut out = Vec::new();
        for (a, &u) in members.iter().enumerate() {
            for &v in &members[a + 1..] {
                let kind = if self.adj[u] == self.adj[v] {
                    TwinKind::Open
                } else if self.closed_neighbors(u) == self.closed_neighbors(v) {
                    TwinKind::Closed
                } else {
                    continue;
                };
                out.push(TwinPair { u, v, kind });
            }
        }
        out
    }
}

/// A biconnected block: its vertex set and number of edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub vertices: VertexSet,
    pub edges: usize,
}

impl Block {
    /// A block is a bridge or a cycle exactly when it has as many edges as
    /// vertices or a single edge.
    pub fn is_edge_or_cycle(&self) -> bool {
        self.edges == 1 || self.edges == self.vertices.len()
    }
}

impl Graph {
    /// Biconnected blocks of every component (isolated vertices have none).
    pub fn blocks(&self) -> Vec<Block> {
        let mut state = BlockState {
            g: self,
            disc: vec![usize::MAX; self.n],
            low: vec![0; self.n],
            time: 0,
            stack: Vec::new(),
            out: Vec::new(),
        };
        for v in 0..self.n {
            if state.disc[v] == usize::MAX {
                state.visit(v, usize::MAX);
            }
        }
        state.out
    }

    /// True when no edge lies on two cycles, i.e. every component is a cactus.
    pub fn is_cactus_forest(&self) -> bool {
        self.blocks().iter().all(Block::is_edge_or_cycle)
    }
}

struct BlockState<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    out: Vec<Block>,
}

impl BlockState<'_> {
    // Recursion depth is bounded by MAX_VERTICES.
    fn visit(&mut self, v: usize, parent: usize) {
        self.disc[v] = self.time;
        self.low[v] = self.time;
        self.time += 1;
        for u in self.g.adj[v] {
            if self.disc[u] == usize::MAX {
                self.stack.push((v, u));
                self.visit(u, v);
                self.low[v] = self.low[v].min(self.low[u]);
                if self.low[u] >= self.disc[v] {
                    let mut vertices = VertexSet::EMPTY;
                    let mut edges = 0;
                    while let Some((a, b)) = self.stack.pop() {
                        vertices = vertices.with(a).with(b);
                        edges += 1;
                        if (a, b) == (v, u) {
                            break;
                        }
                    }
                    self.out.push(Block { vertices, edges });
                }
            } else if u != parent && self.disc[u] < self.disc[v] {
                self.stack.push((v, u));
                self.low[v] = self.low[v].min(self.disc[u]);
            }
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// The two stable sides of a connected bipartite graph, `|U| <= |W|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    u: VertexSet,
    w: VertexSet,
}

impl Bipartition {
    pub(crate) fn new_unchecked(u: VertexSet, w: VertexSet) -> Self {
        debug_assert!(u.is_disjoint(w));
        debug_assert!(u.len() <= w.len());
        Bipartition { u, w }
    }

    /// Checks that `(u, w)` is a valid stable bipartition of `g`, swapping
    /// sides if needed so that `|U| <= |W|`.
    pub fn for_graph(g: &Graph, u: VertexSet, w: VertexSet) -> Option<Self> {
        if !u.is_disjoint(w) || (u | w) != g.vertices() {
            return None;
        }
        let stable = |side: VertexSet| side.iter().all(|v| g.neighbors(v).is_disjoint(side));
        if !stable(u) || !stable(w) {
            return None;
        }
        let (u, w) = if w.len() < u.len() || (w.len() == u.len() && w.contains(0)) {
            (w, u)
        } else {
            (u, w)
        };
        Some(Bipartition { u, w })
    }

    /// The smaller side.
    pub fn u(&self) -> VertexSet {
        self.u
    }

    /// The larger side.
    pub fn w(&self) -> VertexSet {
        self.w
    }

    pub fn r(&self) -> usize {
        self.u.len()
    }

    pub fn s(&self) -> usize {
        self.w.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TwinKind {
    /// `N(u) = N(v)`
    Open,
    /// `N[u] = N[v]`
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TwinPair {
    pub u: usize,
    pub v: usize,
    pub kind: TwinKind,
}
