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

//! Named graph families and their known location-domination numbers.
//!
//! Labelling conventions:
//!
//! * path, cycle: consecutive vertices `0 - 1 - ... - (n-1)` (cycle closes on 0);
//! * star `K_{1,n-1}`: centre 0;
//! * complete bipartite `K_{r,s}`: `U = 0..r`, `W = r..r+s`;
//! * bi-star `K_2(r,s)`: centres 0 and 1, then the `r - 1` leaves of 0, then
//!   the `s - 1` leaves of 1;
//! * banner: the 4-cycle `0 1 2 3` with pendant 4 on vertex 0;
//! * extremal `G(r,s)`: `U = 0..r` where vertex `i` stands for element
//!   `i + 1` of `[r]`, followed by one vertex per member of `W` in
//!   construction order.

use serde::Serialize;

use crate::bipartite::feasibility_window;
use crate::error::FamilyError;
use crate::graph::Graph;
use crate::vertex_set::{k_subsets, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    CompleteBipartite { r: usize, s: usize },
    Bistar { r: usize, s: usize },
    Extremal { r: usize, s: usize },
    Banner,
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Star { .. } => "star",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::Bistar { .. } => "bistar",
            FamilySpec::Extremal { .. } => "extremal",
            FamilySpec::Banner => "banner",
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path { n } | FamilySpec::Cycle { n } | FamilySpec::Star { n } => n,
            FamilySpec::CompleteBipartite { r, s }
            | FamilySpec::Bistar { r, s }
            | FamilySpec::Extremal { r, s } => r + s,
            FamilySpec::Banner => 5,
        }
    }
}

fn bad(family: &'static str, requirement: impl Into<String>) -> FamilyError {
    FamilyError::BadParameters {
        family,
        requirement: requirement.into(),
    }
}

fn check_order(family: &'static str, n: usize) -> Result<(), FamilyError> {
    if n > MAX_VERTICES {
        return Err(bad(family, format!("order {n} exceeds {MAX_VERTICES}")));
    }
    Ok(())
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    let name = spec.name();
    check_order(name, spec.order())?;
    let graph = match *spec {
        FamilySpec::Path { n } => {
            if n < 1 {
                return Err(bad(name, "needs n >= 1"));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::new(n, &edges)?
        }
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(bad(name, format!("needs n >= 3, got {n}")));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::new(n, &edges)?
        }
        FamilySpec::Star { n } => {
            if n < 2 {
                return Err(bad(name, format!("needs n >= 2, got {n}")));
            }
            let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
            Graph::new(n, &edges)?
        }
        FamilySpec::CompleteBipartite { r, s } => {
            if r < 1 || s < 1 {
                return Err(bad(name, format!("needs r, s >= 1, got ({r}, {s})")));
            }
            let mut edges = Vec::with_capacity(r * s);
            for i in 0..r {
                edges.extend((r..r + s).map(|j| (i, j)));
            }
            Graph::new(r + s, &edges)?
        }
        FamilySpec::Bistar { r, s } => {
            if r < 2 || s < 2 {
                return Err(bad(name, format!("needs r, s >= 2, got ({r}, {s})")));
            }
            let mut edges = vec![(0, 1)];
            edges.extend((2..r + 1).map(|leaf| (0, leaf)));
            edges.extend((r + 1..r + s).map(|leaf| (1, leaf)));
            Graph::new(r + s, &edges)?
        }
        FamilySpec::Extremal { r, s } => extremal(r, s)?.graph,
        FamilySpec::Banner => Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])?,
    };
    Ok(graph)
}

/// A member of the extremal bipartite family, with `W` spelled out as
/// subsets of `U`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalWitness {
    pub r: usize,
    pub s: usize,
    /// Members of `W` as subsets of the `U` indices `0..r`.
    pub w_subsets: Vec<VertexSet>,
    #[serde(skip)]
    pub graph: Graph,
}

impl ExtremalWitness {
    /// `W` written with the 1-based element names, e.g. `"134"`.
    pub fn w_names(&self) -> Vec<String> {
        self.w_subsets
            .iter()
            .map(|w| {
                let sep = if self.r >= 10 { "," } else { "" };
                w.iter()
                    .map(|i| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect()
    }
}

/// Smallest `s` for which the extremal construction exists: `⌈3r/2 + 1⌉`.
pub fn minimum_extremal_s(r: usize) -> usize {
    (3 * r).div_ceil(2) + 1
}

/// The base `W` for `s = ⌈3r/2 + 1⌉`: the full set, every set missing one
/// element, every set missing a consecutive pair `{2i-1, 2i}`, and for odd
/// `r` also the set missing `{r-1, r}`.
fn base_subsets(r: usize) -> Vec<VertexSet> {
    let full = VertexSet::full(r);
    let mut w = vec![full];
    w.extend((0..r).map(|i| full.without(i)));
    w.extend((0..r / 2).map(|i| full.without(2 * i).without(2 * i + 1)));
    if r % 2 == 1 {
        w.push(full.without(r - 2).without(r - 1));
    }
    w
}

/// Builds `G(r, s)`.
///
/// Beyond the base size, further members of `W` are the nonempty subsets of
/// `[r]` not yet used, taken by increasing size and then lexicographically.
pub fn extremal(r: usize, s: usize) -> Result<ExtremalWitness, FamilyError> {
    let window = feasibility_window(r, s).map_err(|e| bad("extremal", e.to_string()))?;
    if !window {
        return Err(bad(
            "extremal",
            format!(
                "needs {} <= s <= 2^r - 1 for r = {r}, got s = {s}",
                minimum_extremal_s(r)
            ),
        ));
    }
    check_order("extremal", r + s)?;
    let mut w_subsets = base_subsets(r);
    debug_assert_eq!(w_subsets.len(), minimum_extremal_s(r));
    let mut used: std::collections::HashSet<VertexSet> = w_subsets.iter().copied().collect();
    'grow: for size in 1..=r {
        for candidate in k_subsets(r, size) {
            if w_subsets.len() == s {
                break 'grow;
            }
            if used.insert(candidate) {
                w_subsets.push(candidate);
            }
        }
    }
    assert_eq!(w_subsets.len(), s, "window guarantees enough subsets");

    let mut edges = Vec::new();
    for (j, w) in w_subsets.iter().enumerate() {
        edges.extend(w.iter().map(|u| (u, r + j)));
    }
    let graph = Graph::new(r + s, &edges)?;
    Ok(ExtremalWitness {
        r,
        s,
        w_subsets,
        graph,
    })
}

/// Known `(λ(G), λ(Ḡ))` for the tabulated families.
///
/// Paths and cycles need order at least 4, stars order at least 4,
/// `K_{r,s}` needs `2 <= r <= s`, and bi-stars `3 <= r <= s`.
pub fn table1_expected(spec: &FamilySpec) -> Result<(usize, usize), FamilyError> {
    let n = spec.order();
    let name = spec.name();
    match *spec {
        FamilySpec::Path { .. } | FamilySpec::Cycle { .. } => {
            if n < 4 {
                return Err(bad(name, format!("tabulated for n >= 4, got {n}")));
            }
            let lambda = (2 * n).div_ceil(5);
            let lambda_bar = if n <= 6 { lambda } else { (2 * n - 2).div_ceil(5) };
            Ok((lambda, lambda_bar))
        }
        FamilySpec::Star { .. } => {
            if n < 4 {
                return Err(bad(name, format!("tabulated for n >= 4, got {n}")));
            }
            Ok((n - 1, n - 1))
        }
        FamilySpec::CompleteBipartite { r, s } => {
            if !(2 <= r && r <= s) {
                return Err(bad(name, format!("tabulated for 2 <= r <= s, got ({r}, {s})")));
            }
            Ok((n - 2, n - 2))
        }
        FamilySpec::Bistar { r, s } => {
            if !(3 <= r && r <= s) {
                return Err(bad(name, format!("tabulated for 3 <= r <= s, got ({r}, {s})")));
            }
            Ok((n - 2, n - 3))
        }
        FamilySpec::Extremal { .. } | FamilySpec::Banner => {
            Err(bad(name, "no closed form is tabulated for this family"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(w: &ExtremalWitness) -> Vec<String> {
        w.w_names()
    }

    #[test]
    fn bistar_shape() {
        let g = generate(&FamilySpec::Bistar { r: 3, s: 3 }).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.has_edge(0, 1));
        let mut degrees = g.degrees();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degrees, vec![3, 3, 1, 1, 1, 1]);
        let bp = g.bipartition().unwrap().unwrap();
        assert_eq!((bp.r(), bp.s()), (3, 3));
        let bp = generate(&FamilySpec::Bistar { r: 3, s: 5 })
            .unwrap()
            .bipartition()
            .unwrap()
            .unwrap();
        assert_eq!((bp.r(), bp.s()), (3, 5));
    }

    #[test]
    fn banner_shape() {
        let g = generate(&FamilySpec::Banner).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.degrees(), vec![3, 2, 2, 2, 1]);
    }

    #[test]
    fn extremal_three_six() {
        let w = extremal(3, 6).unwrap();
        assert_eq!(names(&w), vec!["123", "23", "13", "12", "3", "1"]);
        assert_eq!(w.graph.order(), 9);
        // u adjacent to w iff u in w
        for (j, ws) in w.w_subsets.iter().enumerate() {
            assert_eq!(w.graph.neighbors(3 + j), *ws);
        }
    }

    #[test]
    fn extremal_even_base() {
        let w = extremal(4, 7).unwrap();
        assert_eq!(names(&w), vec!["1234", "234", "134", "124", "123", "34", "12"]);
        let w = extremal(5, 9).unwrap();
        assert_eq!(
            names(&w),
            vec!["12345", "2345", "1345", "1245", "1235", "1234", "345", "125", "123"]
        );
    }

    #[test]
    fn extremal_extension_rule() {
        let w = extremal(3, 7).unwrap();
        assert_eq!(names(&w).last().unwrap(), "2");
        let full = extremal(5, 31).unwrap();
        let mut all = full.w_subsets.clone();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 31);
        assert!(all.iter().all(|w| !w.is_empty()));
    }

    #[test]
    fn extremal_window_enforced() {
        assert!(extremal(3, 5).is_err());
        assert!(extremal(3, 8).is_err());
        assert!(extremal(2, 3).is_err());
        assert_eq!(minimum_extremal_s(3), 6);
        assert_eq!(minimum_extremal_s(4), 7);
        assert_eq!(minimum_extremal_s(5), 9);
    }

    #[test]
    fn parameter_errors() {
        assert!(generate(&FamilySpec::Cycle { n: 2 }).is_err());
        assert!(generate(&FamilySpec::Bistar { r: 1, s: 3 }).is_err());
        assert!(generate(&FamilySpec::Path { n: 65 }).is_err());
        let err = generate(&FamilySpec::Star { n: 1 }).unwrap_err();
        assert!(err.to_string().starts_with("star:"));
    }

    #[test]
    fn table_values() {
        assert_eq!(table1_expected(&FamilySpec::Path { n: 10 }).unwrap(), (4, 4));
        assert_eq!(table1_expected(&FamilySpec::Star { n: 7 }).unwrap(), (6, 6));
        assert_eq!(table1_expected(&FamilySpec::Bistar { r: 3, s: 4 }).unwrap(), (5, 4));
        assert_eq!(table1_expected(&FamilySpec::Cycle { n: 8 }).unwrap(), (4, 3));
        assert_eq!(table1_expected(&FamilySpec::Path { n: 6 }).unwrap(), (3, 3));
        assert!(table1_expected(&FamilySpec::Path { n: 3 }).is_err());
        assert!(table1_expected(&FamilySpec::Bistar { r: 2, s: 3 }).is_err());
        assert!(table1_expected(&FamilySpec::Banner).is_err());
    }
}
