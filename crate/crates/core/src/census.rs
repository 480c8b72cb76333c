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

//! Exhaustive check of the bipartite characterization on small graphs.
//!
//! A connected bipartite graph with sides `U = 0..r` and `W` is fixed by the
//! multiset of `W`-traces, each a nonempty subset of `U`. Instances are
//! generated as nondecreasing mask sequences, kept only when they are the
//! least image under every permutation of `U` and the graph is connected.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::bipartite::{classify, code_side_audit, feasibility_window, unique_code_audit};
use crate::enumerate::canonical_code;
use crate::graph::Graph;
use crate::io::graph6;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusInstance {
    pub r: usize,
    pub s: usize,
    /// `W`-traces as bit masks over `U`, nondecreasing.
    pub masks: Vec<u64>,
    pub graph: Graph,
}

fn permutations(r: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let v = left.remove(i);
            prefix.push(v);
            go(prefix, left, out);
            prefix.pop();
            left.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..r).collect(), &mut out);
    out
}

fn permute_mask(mask: u64, perm: &[usize]) -> u64 {
    VertexSet::from_bits(mask)
        .iter()
        .fold(0, |acc, i| acc | 1 << perm[i])
}

fn is_least_image(masks: &[u64], perms: &[Vec<usize>]) -> bool {
    let mut image = vec![0; masks.len()];
    perms.iter().all(|perm| {
        for (dst, &m) in image.iter_mut().zip(masks) {
            *dst = permute_mask(m, perm);
        }
        image.sort_unstable();
        masks <= image.as_slice()
    })
}

fn trace_graph(r: usize, masks: &[u64]) -> Graph {
    let mut edges = Vec::new();
    for (j, &m) in masks.iter().enumerate() {
        edges.extend(VertexSet::from_bits(m).iter().map(|u| (u, r + j)));
    }
    Graph::new(r + masks.len(), &edges).expect("order checked by caller")
}

/// Connected bipartite instances with `1 <= r <= s`, `4 <= r + s <= max_n`,
/// one per isomorphism class, ordered by `(r, s, masks)`.
pub fn bipartite_instances(max_n: usize) -> Vec<CensusInstance> {
    assert!(max_n <= 12, "census enumeration is limited to n <= 12");
    let mut out = Vec::new();
    for r in 1..=max_n / 2 {
        let perms = permutations(r);
        let top = (1u64 << r) - 1;
        for s in r.max(4usize.saturating_sub(r))..=max_n - r {
            let mut batch = Vec::new();
            let mut masks = Vec::with_capacity(s);
            collect_multisets(r, s, 1, top, &mut masks, &perms, &mut batch);
            if r == s {
                // both sides can play U, so an orbit may show up twice
                let mut seen = HashSet::new();
                batch.retain(|inst| seen.insert(canonical_code(&inst.graph)));
            }
            out.extend(batch);
        }
    }
    out
}

fn collect_multisets(
    r: usize,
    s: usize,
    from: u64,
    top: u64,
    masks: &mut Vec<u64>,
    perms: &[Vec<usize>],
    out: &mut Vec<CensusInstance>,
) {
    if masks.len() == s {
        let covered = masks.iter().fold(0, |acc, m| acc | m);
        if covered != top || !is_least_image(masks, perms) {
            return;
        }
        let graph = trace_graph(r, masks);
        if graph.is_connected() {
            out.push(CensusInstance {
                r,
                s,
                masks: masks.clone(),
                graph,
            });
        }
        return;
    }
    for m in from..=top {
        masks.push(m);
        collect_multisets(r, s, m, top, masks, perms, out);
        masks.pop();
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct RelationCounts {
    pub minus_one: usize,
    pub zero: usize,
    pub plus_one: usize,
}

impl RelationCounts {
    fn add(&mut self, relation: i8) {
        match relation {
            -1 => self.minus_one += 1,
            0 => self.zero += 1,
            1 => self.plus_one += 1,
            _ => {}
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeSummary {
    pub r: usize,
    pub s: usize,
    pub instances: usize,
    pub relations: RelationCounts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusViolation {
    pub graph6: String,
    pub r: usize,
    pub s: usize,
    pub check: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub max_n: usize,
    pub instances: usize,
    pub relations: RelationCounts,
    pub shapes: Vec<ShapeSummary>,
    pub violations: Vec<CensusViolation>,
}

/// Failed checks for one instance, by name.
fn check_instance(inst: &CensusInstance) -> (i8, Vec<&'static str>) {
    let g = &inst.graph;
    let mut failed = Vec::new();
    let report = match classify(g) {
        Ok(r) => r,
        Err(_) => return (0, vec!["classify"]),
    };
    let relation = report.relation.expect("census graphs are within solver reach");
    let (r, s) = (report.r, report.s);
    if (r, s) != (inst.r, inst.s) {
        failed.push("sides");
    }
    if relation.abs() > 1 {
        failed.push("relation-bound");
    }
    if report.prediction_holds() != Some(true) {
        failed.push("prediction");
    }
    let c = report.conditions;
    if c.c3 != c.c3_twin_form {
        failed.push("twin-form");
    }
    if r >= 3 && r < s && c.all() != (relation == 1) {
        failed.push("characterization");
    }
    if r <= 2 && relation > 0 {
        failed.push("small-side");
    }
    if r == s && relation > 0 {
        failed.push("balanced");
    }
    if relation == 1 {
        if unique_code_audit(g, &report) != Ok(Some(true)) {
            failed.push("unique-code");
        }
        if feasibility_window(r, s) != Ok(true) {
            failed.push("window");
        }
    }
    let code = report.witness_g.expect("solved");
    if code_side_audit(g, code, &report) != Ok(true) {
        failed.push("code-sides");
    }
    (relation, failed)
}

/// Runs the census on `jobs` worker threads (0 = rayon default). Output is
/// independent of the thread count.
pub fn run_census(max_n: usize, jobs: usize) -> CensusReport {
    let instances = bipartite_instances(max_n);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let results: Vec<(i8, Vec<&'static str>)> =
        pool.install(|| instances.par_iter().map(check_instance).collect());

    let mut relations = RelationCounts::default();
    let mut shapes: Vec<ShapeSummary> = Vec::new();
    let mut violations = Vec::new();
    for (inst, (relation, failed)) in instances.iter().zip(results) {
        relations.add(relation);
        match shapes.last_mut() {
            Some(last) if (last.r, last.s) == (inst.r, inst.s) => {
                last.instances += 1;
                last.relations.add(relation);
            }
            _ => {
                let mut summary = ShapeSummary {
                    r: inst.r,
                    s: inst.s,
                    instances: 1,
                    relations: RelationCounts::default(),
                };
                summary.relations.add(relation);
                shapes.push(summary);
            }
        }
        for check in failed {
            violations.push(CensusViolation {
                graph6: graph6::encode(&inst.graph),
                r: inst.r,
                s: inst.s,
                check: check.to_string(),
            });
        }
    }
    CensusReport {
        max_n,
        instances: instances.len(),
        relations,
        shapes,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{connected_graphs, is_isomorphic};

    #[test]
    fn small_counts_by_shape() {
        let inst = bipartite_instances(5);
        let shapes: Vec<(usize, usize)> = inst.iter().map(|i| (i.r, i.s)).collect();
        // n = 4: star K_{1,3}; (2,2): P4 and C4
        // n = 5: K_{1,4}; (2,3): P5, K_{2,3}, bi-star K_2(2,3), banner
        assert_eq!(shapes.iter().filter(|&&s| s == (1, 3)).count(), 1);
        assert_eq!(shapes.iter().filter(|&&s| s == (2, 2)).count(), 2);
        assert_eq!(shapes.iter().filter(|&&s| s == (1, 4)).count(), 1);
        assert_eq!(shapes.iter().filter(|&&s| s == (2, 3)).count(), 4);
    }

    #[test]
    fn instances_are_pairwise_non_isomorphic() {
        let inst = bipartite_instances(7);
        for (a, x) in inst.iter().enumerate() {
            for y in &inst[a + 1..] {
                assert!(!is_isomorphic(&x.graph, &y.graph), "{:?} ~ {:?}", x.masks, y.masks);
            }
        }
    }

    #[test]
    fn matches_filtered_exhaustive_enumeration() {
        for n in 4..=7 {
            let bipartite = connected_graphs(n)
                .into_iter()
                .filter(|g| g.bipartition().unwrap().is_some())
                .count();
            let generated = bipartite_instances(n).iter().filter(|i| i.r + i.s == n).count();
            assert_eq!(generated, bipartite, "n = {n}");
        }
    }

    #[test]
    fn census_to_seven_is_clean_and_thread_independent() {
        let one = run_census(7, 1);
        assert!(one.violations.is_empty(), "{:?}", one.violations);
        assert_eq!(one, run_census(7, 3));
        assert_eq!(one.relations.plus_one, 0);
    }
}
