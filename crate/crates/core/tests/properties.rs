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

//! Randomized checks of the structural facts the library relies on.

mod common;

use proptest::prelude::*;

use locdom::assoc::AssociatedGraph;
use locdom::bipartite::{bipartition_of, classify, condition_triple};
use locdom::enumerate::{canonical_code, is_isomorphic};
use locdom::families::extremal;
use locdom::io::{edge_list, graph6};
use locdom::ld::{
    is_distinguishing, is_dominating, is_ld_set, lambda_bounded, lambda_bruteforce, trace,
};
use locdom::{Graph, VertexSet};

use common::set;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn graph_with_subset(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), any::<u64>().prop_map(move |m| VertexSet::from_bits(m) & VertexSet::full(n)))
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// Bipartite graph from distinct random traces over `U = 0..r`.
fn trace_bipartite() -> impl Strategy<Value = Graph> {
    traces_over(2, 1)
}

fn traces_over(min_r: usize, min_share: usize) -> impl Strategy<Value = Graph> {
    (min_r..=4).prop_flat_map(move |r| {
        let top = (1u64 << r) - 1;
        let least = (top as usize * min_share / 2).clamp(1, 8);
        proptest::collection::btree_set(1..=top, least..=(top as usize).min(8)).prop_map(move |w| {
            let mut edges = Vec::new();
            for (j, &mask) in w.iter().enumerate() {
                edges.extend(VertexSet::from_bits(mask).iter().map(|u| (u, r + j)));
            }
            Graph::new(r + w.len(), &edges).unwrap()
        })
    })
}

fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.order();
    let mut edges: Vec<(usize, usize)> = a.edges().collect();
    edges.extend(b.edges().map(|(i, j)| (i + shift, j + shift)));
    Graph::new(a.order() + b.order(), &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(256) })]

    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.order() * (g.order() - 1) / 2);
    }

    #[test]
    fn twin_pairs_follow_relabelling((g, perm) in graph(9).prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) })) {
        let h = g.permuted(&perm);
        let mut moved: Vec<(usize, usize)> = g
            .twin_pairs(g.vertices())
            .iter()
            .map(|p| (perm[p.u].min(perm[p.v]), perm[p.u].max(perm[p.v])))
            .collect();
        moved.sort();
        let direct: Vec<(usize, usize)> = h.twin_pairs(h.vertices()).iter().map(|p| (p.u, p.v)).collect();
        prop_assert_eq!(moved, direct);
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
    }

    #[test]
    fn components_agree_with_traversal(g in graph(12)) {
        let comps = g.connected_components();
        prop_assert_eq!(comps.len() == 1, g.is_connected());
        let covered = comps.iter().fold(VertexSet::EMPTY, |acc, &c| acc | c);
        prop_assert_eq!(covered, g.vertices());
        for c in comps {
            prop_assert_eq!(g.reachable(c.first().unwrap()), c);
        }
    }

    #[test]
    fn bipartition_has_no_inner_edges(g in graph(10)) {
        if let Ok(Some(bp)) = g.bipartition() {
            for (i, j) in g.edges() {
                prop_assert!(bp.u().contains(i) != bp.u().contains(j));
            }
            prop_assert!(bp.r() <= bp.s());
        }
    }

    #[test]
    fn formats_round_trip(g in graph(14)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g.clone());
        prop_assert_eq!(edge_list::decode(&edge_list::encode(&g)).unwrap(), g);
    }

    #[test]
    fn distinguishing_survives_complement((g, s) in graph_with_subset(12)) {
        prop_assert_eq!(is_distinguishing(&g, s), is_distinguishing(&g.complement(), s));
    }

    #[test]
    fn ld_sets_transfer_to_the_complement((g, s) in graph_with_subset(10)) {
        prop_assume!(is_ld_set(&g, s));
        let gbar = g.complement();
        let full: Vec<usize> = (g.vertices() - s).iter().filter(|&v| trace(&g, v, s) == s).collect();
        prop_assert_eq!(is_ld_set(&gbar, s), is_dominating(&gbar, s));
        prop_assert_eq!(is_ld_set(&gbar, s), full.is_empty());
        for u in full {
            prop_assert!(is_ld_set(&gbar, s.with(u)));
        }
    }

    #[test]
    fn complement_changes_lambda_by_at_most_one(g in graph(9)) {
        let a = lambda_bruteforce(&g, false).unwrap().lambda;
        let b = lambda_bruteforce(&g.complement(), false).unwrap().lambda;
        prop_assert!(a.abs_diff(b) <= 1);
    }

    #[test]
    fn bounded_search_matches_the_oracle(g in graph(9), slack in 0usize..3) {
        let exact = lambda_bruteforce(&g, false).unwrap();
        let hit = lambda_bounded(&g, exact.lambda + slack);
        prop_assert_eq!(hit.size, Some(exact.lambda));
        prop_assert_eq!(hit.witness, Some(exact.witness));
        if exact.lambda > 0 {
            prop_assert!(!lambda_bounded(&g, exact.lambda - 1).found);
        }
        prop_assert!(is_ld_set(&g, exact.witness));
    }

    #[test]
    fn lambda_adds_over_components(a in graph(6), b in graph(6)) {
        let joined = disjoint_union(&a, &b);
        let parts = lambda_bruteforce(&a, false).unwrap().lambda + lambda_bruteforce(&b, false).unwrap().lambda;
        prop_assert_eq!(lambda_bruteforce(&joined, false).unwrap().lambda, parts);
        prop_assert_eq!(lambda_bounded(&joined, joined.order()).size, Some(parts));
    }

    #[test]
    fn associated_graph_ignores_complement((g, s) in graph_with_subset(12)) {
        prop_assume!(is_distinguishing(&g, s));
        let k = s.len();
        let ag = AssociatedGraph::build(&g, s).unwrap();
        let bar = AssociatedGraph::build(&g.complement(), s).unwrap();
        prop_assert_eq!(ag.vertices(), bar.vertices());
        prop_assert_eq!(ag.edges(), bar.edges());
        for x in ag.vertices() {
            prop_assert_eq!(bar.level(x), k - ag.level(x));
        }
        prop_assert_eq!(ag.vertices().len(), g.order() - k);
    }

    #[test]
    fn associated_graph_structure((g, s) in graph_with_subset(12)) {
        prop_assume!(is_distinguishing(&g, s));
        let ag = AssociatedGraph::build(&g, s).unwrap();
        let levels = ag.levels();
        prop_assert!(levels[0].len() <= 1 && levels[s.len()].len() <= 1);
        for e in ag.edges() {
            let diff = ag.trace(e.x) ^ ag.trace(e.y);
            prop_assert_eq!(diff, VertexSet::singleton(e.label));
            prop_assert_eq!(ag.level(e.x).abs_diff(ag.level(e.y)), 1);
        }
        for x in ag.vertices() {
            let labels: Vec<usize> = ag.edges().iter().filter(|e| e.x == x || e.y == x).map(|e| e.label).collect();
            let distinct: VertexSet = labels.iter().collect();
            prop_assert_eq!(distinct.len(), labels.len());
        }
        prop_assert!(ag.parity_audit());
        for (u, m) in ag.label_multiplicity() {
            if m > 0 {
                prop_assert!(!is_distinguishing(&g, s.without(u)));
            }
        }
    }

    #[test]
    fn label_subgraph_components_share_traces((g, s) in graph_with_subset(12), pick in any::<u64>()) {
        prop_assume!(is_distinguishing(&g, s) && !s.is_empty());
        let s_prime = VertexSet::from_bits(pick) & s;
        prop_assume!(!s_prime.is_empty());
        let ag = AssociatedGraph::build(&g, s).unwrap();
        let h = ag.label_subgraph(s_prime).unwrap();
        prop_assert!(h.component_trace_check());
        let rest = s - s_prime;
        for (c, t) in h.components().iter().zip(h.component_traces()) {
            for x in c.iter() {
                prop_assert_eq!(ag.trace(x) & rest, t);
            }
        }
        let stats = h.cactus_stats();
        prop_assert_eq!(stats.cy + stats.vertices, stats.edges + stats.cc);
    }

    #[test]
    fn two_edges_per_label_bounds(g in traces_over(3, 1), pick in any::<u64>(), choice in any::<u64>()) {
        // U is the low block by construction: its members only see larger indices
        let base: VertexSet = g.vertices().iter().filter(|&v| g.neighbors(v).iter().all(|w| w > v)).collect();
        prop_assume!(is_distinguishing(&g, base));
        let ag = AssociatedGraph::build(&g, base).unwrap();
        let doubled: VertexSet = ag.label_multiplicity().into_iter().filter(|&(_, m)| m >= 2).map(|(u, _)| u).collect();
        prop_assume!(!doubled.is_empty());
        let mut s_prime = doubled & VertexSet::from_bits(pick);
        if s_prime.is_empty() {
            s_prime.insert(doubled.first().unwrap());
        }
        let mut positions = Vec::new();
        for (slot, u) in s_prime.iter().enumerate() {
            let carrying: Vec<usize> = (0..ag.edges().len()).filter(|&i| ag.edges()[i].label == u).collect();
            let a = (choice >> (4 * slot)) as usize % carrying.len();
            let b = (a + 1 + (choice >> (4 * slot + 2)) as usize % (carrying.len() - 1)) % carrying.len();
            positions.push(carrying[a]);
            positions.push(carrying[b]);
        }
        let stats = ag.edge_subgraph(&positions).cactus_stats();
        prop_assert_eq!(stats.edges, 2 * s_prime.len());
        prop_assert!(stats.is_cactus);
        prop_assert!(4 * stats.vertices >= 3 * stats.edges + 4 * stats.cc);
        prop_assert!(2 * stats.vertices >= 3 * s_prime.len() + 2);
        prop_assert!(stats.ex >= 0);
    }

    #[test]
    fn deletions_never_raise_order_minus_components(g in graph(12), steps in proptest::collection::vec(any::<(bool, u8)>(), 0..20)) {
        let rank = |h: &Graph| h.order() - h.connected_components().len();
        let mut current = g;
        let mut score = rank(&current);
        for (edge, pick) in steps {
            if current.order() == 0 {
                break;
            }
            let edges: Vec<(usize, usize)> = current.edges().collect();
            if edge && !edges.is_empty() {
                let (a, b) = edges[pick as usize % edges.len()];
                current.remove_edge(a, b);
            } else {
                let v = pick as usize % current.order();
                current = current.induced(current.vertices().without(v));
            }
            let next = rank(&current);
            prop_assert!(next <= score);
            score = next;
        }
    }

    #[test]
    fn condition_forms_agree(g in trace_bipartite()) {
        prop_assume!(g.is_connected());
        let bp = bipartition_of(&g).unwrap();
        let t = condition_triple(&g, &bp).unwrap();
        prop_assert_eq!(t.c3, t.c3_twin_form);
        let report = classify(&g).unwrap();
        prop_assert!(report.relation.unwrap().abs() <= 1);
        prop_assert_eq!(report.prediction_holds(), Some(true));
    }
}

#[test]
fn missing_label_does_not_make_a_vertex_removable() {
    // S = {0, 1, 2}; base vertices carry traces {0,1}, {0,2}, {1,2} and 2 is
    // also joined to 0 and 1, so no two traces differ in one element
    let g = Graph::new(
        6,
        &[(3, 0), (3, 1), (4, 0), (4, 2), (5, 1), (5, 2), (2, 0), (2, 1)],
    )
    .unwrap();
    let s = set(&[0, 1, 2]);
    let ag = AssociatedGraph::build(&g, s).unwrap();
    assert!(ag.edges().is_empty());
    assert!(!is_distinguishing(&g, s.without(2)));
}

#[test]
fn extremal_members_are_distinct_and_nonempty() {
    for r in 3..=5 {
        for s in locdom::families::minimum_extremal_s(r)..(1 << r) {
            let w = extremal(r, s).unwrap();
            let distinct: std::collections::BTreeSet<_> = w.w_subsets.iter().collect();
            assert_eq!(distinct.len(), s);
            assert!(w.w_subsets.iter().all(|m| !m.is_empty()));
        }
    }
}

#[test]
fn extremal_lambdas_match_the_oracle() {
    for (r, s) in [(3, 6), (3, 7), (4, 7), (4, 8)] {
        let g = extremal(r, s).unwrap().graph;
        assert_eq!(lambda_bruteforce(&g, false).unwrap().lambda, r);
        assert_eq!(lambda_bruteforce(&g.complement(), false).unwrap().lambda, r + 1);
    }
}

#[test]
fn isomorphism_respects_relabelling() {
    let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
    assert!(is_isomorphic(&g, &g.permuted(&[4, 2, 0, 1, 3])));
}
