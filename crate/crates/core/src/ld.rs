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

//! Locating-dominating sets.
//!
//! A set `S` is *dominating* when every vertex outside `S` has a neighbour in
//! `S`, and *distinguishing* when the traces `N(v) ∩ S` of the vertices
//! outside `S` are pairwise distinct. An LD-set is both; the
//! location-domination number `λ(G)` is the size of a smallest one.
//!
//! Two exact searches are provided. [`lambda_bruteforce`] scans every subset
//! by increasing size and is the reference oracle. [`lambda_bounded`] walks
//! the same candidate order depth-first and prunes partial sets that can no
//! longer be completed; it reaches graphs far beyond the oracle cap.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::LdError;
use crate::graph::Graph;
use crate::vertex_set::{k_subsets, VertexSet};

/// Largest order accepted by the exhaustive oracle.
pub const DEFAULT_ORACLE_CAP: usize = 20;

/// Order from which the bounded search splits the first branching level
/// across the rayon pool.
const PARALLEL_THRESHOLD: usize = 24;

#[inline]
pub fn trace(g: &Graph, v: usize, s: VertexSet) -> VertexSet {
    g.neighbors(v) & s
}

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    (g.vertices() - s).iter().all(|v| !trace(g, v, s).is_empty())
}

/// First pair (by sorted trace, then index) of vertices outside `s` with equal traces.
pub fn undistinguished_pair(g: &Graph, s: VertexSet) -> Option<(usize, usize)> {
    let mut traces: Vec<(VertexSet, usize)> = (g.vertices() - s)
        .iter()
        .map(|v| (trace(g, v, s), v))
        .collect();
    traces.sort_unstable_by_key(|&(t, v)| (t.bits(), v));
    traces
        .windows(2)
        .find(|w| w[0].0 == w[1].0)
        .map(|w| (w[0].1.min(w[1].1), w[0].1.max(w[1].1)))
}

pub fn is_distinguishing(g: &Graph, s: VertexSet) -> bool {
    undistinguished_pair(g, s).is_none()
}

pub fn is_ld_set(g: &Graph, s: VertexSet) -> bool {
    is_dominating(g, s) && is_distinguishing(g, s)
}

/// The vertex left undominated by a distinguishing set, if any.
///
/// A distinguishing set leaves at most one vertex with an empty trace; a
/// non-distinguishing input is rejected instead of answered.
pub fn undominated_vertex(g: &Graph, s: VertexSet) -> Result<Option<usize>, LdError> {
    if let Some((x, y)) = undistinguished_pair(g, s) {
        return Err(LdError::NotDistinguishing { x, y });
    }
    Ok((g.vertices() - s)
        .iter()
        .find(|&v| trace(g, v, s).is_empty()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LdReport {
    pub lambda: usize,
    /// First LD-set of size `lambda` in (size, lexicographic) order.
    pub witness: VertexSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_codes: Option<Vec<VertexSet>>,
}

/// Exact `λ(g)` by exhaustive scan, refusing graphs above [`DEFAULT_ORACLE_CAP`].
pub fn lambda_bruteforce(g: &Graph, enumerate_all: bool) -> Result<LdReport, LdError> {
    lambda_bruteforce_with_cap(g, enumerate_all, DEFAULT_ORACLE_CAP)
}

pub fn lambda_bruteforce_with_cap(
    g: &Graph,
    enumerate_all: bool,
    cap: usize,
) -> Result<LdReport, LdError> {
    let n = g.order();
    if n > cap {
        return Err(LdError::OracleCapExceeded { n, cap });
    }
    // V itself is always an LD-set, so the loop returns by k = n.
    for k in 0..=n {
        let mut hits = k_subsets(n, k).filter(|&s| is_ld_set(g, s));
        let Some(witness) = hits.next() else {
            continue;
        };
        let all_codes = enumerate_all.then(|| {
            let mut codes = vec![witness];
            codes.extend(hits);
            codes
        });
        return Ok(LdReport {
            lambda: k,
            witness,
            all_codes,
        });
    }
    unreachable!("the full vertex set is locating-dominating")
}

/// Every LD-code (LD-set of size `λ(g)`), lexicographically sorted.
pub fn ld_codes(g: &Graph) -> Result<Vec<VertexSet>, LdError> {
    let report = lambda_bruteforce(g, true)?;
    Ok(report.all_codes.unwrap_or_default())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundedResult {
    pub kmax: usize,
    pub found: bool,
    /// Smallest LD-set size, when it is at most `kmax`.
    pub size: Option<usize>,
    pub witness: Option<VertexSet>,
}

/// Decides whether `g` has an LD-set of size at most `kmax`.
///
/// Sizes are tried upward, and within a size candidates follow the same
/// lexicographic order as [`lambda_bruteforce`], so a found witness is the
/// oracle's witness. `kmax` above the order is clamped.
pub fn lambda_bounded(g: &Graph, kmax: usize) -> BoundedResult {
    let n = g.order();
    let kmax = kmax.min(n);
    for k in 0..=kmax {
        if let Some(witness) = search_size(g, k) {
            return BoundedResult {
                kmax,
                found: true,
                size: Some(k),
                witness: Some(witness),
            };
        }
    }
    BoundedResult {
        kmax,
        found: false,
        size: None,
        witness: None,
    }
}

/// First LD-set of exactly `k` vertices in lexicographic order.
fn search_size(g: &Graph, k: usize) -> Option<VertexSet> {
    let n = g.order();
    if k == 0 {
        return is_ld_set(g, VertexSet::EMPTY).then_some(VertexSet::EMPTY);
    }
    if k > n {
        return None;
    }
    let search = Search { g, k };
    if !search.viable(VertexSet::EMPTY, 0) {
        return None;
    }
    if n >= PARALLEL_THRESHOLD {
        (0..=n - k)
            .into_par_iter()
            .find_map_first(|v| search.descend(VertexSet::singleton(v), v + 1))
    } else {
        (0..=n - k).find_map(|v| search.descend(VertexSet::singleton(v), v + 1))
    }
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
}

impl Search<'_> {
    /// Extends `chosen` with vertices `>= next`.
    fn descend(&self, chosen: VertexSet, next: usize) -> Option<VertexSet> {
        let n = self.g.order();
        let slots = self.k - chosen.len();
        if slots == 0 {
            return is_ld_set(self.g, chosen).then_some(chosen);
        }
        if !self.viable(chosen, next) {
            return None;
        }
        (next..=n - slots).find_map(|v| self.descend(chosen.with(v), v + 1))
    }

    /// False when no completion of `chosen` by `k - |chosen|` vertices drawn
    /// from `next..n` can be an LD-set.
    fn viable(&self, chosen: VertexSet, next: usize) -> bool {
        let g = self.g;
        let slots = self.k - chosen.len();
        let pool = g.vertices() - VertexSet::full(next) - chosen;
        if pool.len() < slots {
            return false;
        }

        let mut traces: Vec<(VertexSet, usize)> = Vec::with_capacity(g.order());
        for v in g.vertices() - chosen {
            let t = trace(g, v, chosen);
            // an undominated vertex must itself be picked or get a picked neighbour
            if t.is_empty() && pool.is_disjoint(g.closed_neighbors(v)) {
                return false;
            }
            traces.push((t, v));
        }
        traces.sort_unstable_by_key(|&(t, v)| (t.bits(), v));

        let mut start = 0;
        while start < traces.len() {
            let t = traces[start].0;
            let end = start + traces[start..].iter().take_while(|e| e.0 == t).count();
            let class = &traces[start..end];
            // `slots` more picks remove at most `slots` members from the class
            // and split what is left into at most 2^slots trace classes.
            if slots < 32 && class.len() > slots + (1usize << slots) {
                return false;
            }
            for (a, &(_, x)) in class.iter().enumerate() {
                for &(_, y) in &class[a + 1..] {
                    let separators = (g.neighbors(x) ^ g.neighbors(y)).with(x).with(y);
                    if pool.is_disjoint(separators) {
                        return false;
                    }
                }
            }
            start = end;
        }
        true
    }
}
