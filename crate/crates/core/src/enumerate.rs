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

//! Small-graph enumeration up to isomorphism.
//!
//! Canonical forms are found by search over vertex orders that list the
//! vertices by non-increasing degree; the canonical code is the largest
//! upper-triangle bit string (graph6 column order) over those orders. This is
//! exponential in the size of the degree classes and meant for orders up to
//! about ten.

use std::collections::HashMap;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 16;

/// Canonical upper-triangle code and the permutation `vertex -> position`
/// that realises it.
pub fn canonical_form(g: &Graph) -> (u128, Vec<usize>) {
    let n = g.order();
    assert!(n <= MAX_CANONICAL_ORDER, "canonical form needs n <= {MAX_CANONICAL_ORDER}");
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let class_of_position: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();

    let mut search = CanonSearch {
        g,
        n,
        total_bits: n * n.saturating_sub(1) / 2,
        class_of_position,
        order: Vec::with_capacity(n),
        used: VertexSet::EMPTY,
        best: None,
        best_order: Vec::new(),
    };
    search.place(0);
    let mut perm = vec![0; n];
    for (pos, &v) in search.best_order.iter().enumerate() {
        perm[v] = pos;
    }
    (search.best.unwrap_or(0), perm)
}

pub fn canonical_code(g: &Graph) -> u128 {
    canonical_form(g).0
}

/// The graph relabelled into canonical position order.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, perm) = canonical_form(g);
    g.permuted(&perm)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && canonical_code(a) == canonical_code(b)
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: usize,
    class_of_position: Vec<usize>,
    order: Vec<usize>,
    used: VertexSet,
    best: Option<u128>,
    best_order: Vec<usize>,
}

impl CanonSearch<'_> {
    /// `prefix` holds the bits of columns `1..order.len()`.
    fn place(&mut self, pos: usize) {
        self.extend(pos, 0, 0);
    }

    fn extend(&mut self, pos: usize, prefix: u128, prefix_len: usize) {
        if pos == self.n {
            if self.best.map_or(true, |b| prefix > b) {
                self.best = Some(prefix);
                self.best_order = self.order.clone();
            }
            return;
        }
        let degree = self.class_of_position[pos];
        for v in 0..self.n {
            if self.used.contains(v) || self.g.degree(v) != degree {
                continue;
            }
            let mut code = prefix;
            for &earlier in &self.order {
                code = code << 1 | self.g.has_edge(earlier, v) as u128;
            }
            let len = prefix_len + pos;
            if let Some(best) = self.best {
                let best_prefix = if len == 0 { 0 } else { best >> (self.total_bits - len) };
                if code < best_prefix {
                    continue;
                }
            }
            self.order.push(v);
            self.used.insert(v);
            self.extend(pos + 1, code, len);
            self.order.pop();
            self.used.remove(v);
        }
    }
}

/// All graphs of order `n` up to isomorphism, in canonical labelling,
/// sorted by canonical code.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 10, "exhaustive enumeration is limited to n <= 10");
    let mut level: Vec<Graph> = vec![Graph::empty(0).unwrap()];
    for m in 1..=n {
        let mut next: HashMap<u128, Graph> = HashMap::new();
        for g in &level {
            for mask in 0..1u64 << (m - 1) {
                let mut rows = g.rows().to_vec();
                rows.push(VertexSet::from_bits(mask));
                let h = Graph::from_rows(rows).expect("rows stay within range");
                let (code, perm) = canonical_form(&h);
                next.entry(code).or_insert_with(|| h.permuted(&perm));
            }
        }
        let mut keyed: Vec<(u128, Graph)> = next.into_iter().collect();
        keyed.sort_by_key(|(code, _)| *code);
        level = keyed.into_iter().map(|(_, g)| g).collect();
    }
    level
}

/// All connected graphs of order `n` up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}
