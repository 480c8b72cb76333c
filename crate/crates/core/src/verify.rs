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

//! Self-checking property suites.
//!
//! Each suite returns the number of instances it examined and a message per
//! violated property. Randomized suites draw from a ChaCha stream seeded by
//! the caller, so a seed reproduces the exact run.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::assoc::{trace_label, AssociatedGraph};
use crate::enumerate::connected_graphs;
use crate::families::{generate, table1_expected, FamilySpec};
use crate::graph::Graph;
use crate::io::graph6;
use crate::ld::{is_distinguishing, is_dominating, is_ld_set, lambda_bruteforce, trace};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Closed forms for paths, cycles, stars, complete bipartite graphs
    /// and bi-stars.
    Table1,
    /// `|λ(G) - λ(Ḡ)| <= 1` over all small connected graphs, plus the
    /// code-transfer facts between a graph and its complement.
    Thm3,
    /// Two-edges-per-label subgraphs of associated graphs.
    Cactus,
    /// Structure of random associated graphs.
    Parity,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Table1, Suite::Thm3, Suite::Cactus, Suite::Parity];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::Thm3 => "thm3",
            Suite::Cactus => "cactus",
            Suite::Parity => "parity",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    pub trials: usize,
    /// Largest order for the exhaustive suite.
    pub max_n: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0,
            trials: 500,
            max_n: 7,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            checked: 0,
            violations: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.violations.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn run_suite(suite: Suite, options: &SuiteOptions) -> SuiteReport {
    match suite {
        Suite::Table1 => known_families(),
        Suite::Thm3 => complement_gap(options.max_n),
        Suite::Cactus => cactus(options.seed, options.trials),
        Suite::Parity => parity(options.seed, options.trials),
    }
}

/// Every family instance covered by the closed-form table check.
pub fn table1_instances() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for n in 4..=14 {
        specs.push(FamilySpec::Path { n });
        specs.push(FamilySpec::Cycle { n });
    }
    specs.extend((4..=12).map(|n| FamilySpec::Star { n }));
    for r in 2..=6 {
        for s in r..=12 - r {
            specs.push(FamilySpec::CompleteBipartite { r, s });
        }
    }
    for r in 3..=6 {
        for s in r..=6 {
            specs.push(FamilySpec::Bistar { r, s });
        }
    }
    specs
}

fn known_families() -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Table1);
    for spec in table1_instances() {
        let expected = table1_expected(&spec).expect("instances are in range");
        let g = generate(&spec).expect("instances are in range");
        let lambda = lambda_bruteforce(&g, false).expect("below cap").lambda;
        let lambda_bar = lambda_bruteforce(&g.complement(), false).expect("below cap").lambda;
        report.checked += 1;
        report.expect((lambda, lambda_bar) == expected, || {
            format!("{spec:?}: computed ({lambda}, {lambda_bar}), expected {expected:?}")
        });
    }
    report
}

fn complement_gap(max_n: usize) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Thm3);
    for n in 1..=max_n {
        for g in connected_graphs(n) {
            report.checked += 1;
            let gbar = g.complement();
            let codes = lambda_bruteforce(&g, true).expect("below cap");
            let lambda_bar = lambda_bruteforce(&gbar, false).expect("below cap").lambda;
            let name = || graph6::encode(&g);
            report.expect(codes.lambda.abs_diff(lambda_bar) <= 1, || {
                format!("{}: λ = {}, λ̄ = {lambda_bar}", name(), codes.lambda)
            });
            for &code in codes.all_codes.as_deref().unwrap_or_default() {
                check_code_transfer(&mut report, &g, &gbar, code);
            }
        }
    }
    report
}

/// An LD-set of `g` stays LD in the complement exactly when it dominates
/// there; it fails to dominate for at most one vertex `u`, and then
/// `code + u` is LD in the complement.
fn check_code_transfer(report: &mut SuiteReport, g: &Graph, gbar: &Graph, code: VertexSet) {
    let name = || format!("{} code {code}", graph6::encode(g));
    let outside = g.vertices() - code;
    let full_trace: Vec<usize> = outside
        .iter()
        .filter(|&v| trace(g, v, code) == code)
        .collect();
    report.expect(full_trace.len() <= 1, || format!("{}: several full traces", name()));
    let ld_bar = is_ld_set(gbar, code);
    report.expect(ld_bar == is_dominating(gbar, code), || {
        format!("{}: complement LD does not match domination", name())
    });
    report.expect(ld_bar == full_trace.is_empty(), || {
        format!("{}: complement LD does not match absence of a full trace", name())
    });
    if let [u] = full_trace[..] {
        report.expect(is_ld_set(gbar, code.with(u)), || {
            format!("{}: adding {u} does not repair the complement", name())
        });
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.2..0.8);
    let mut g = Graph::empty(n).expect("small order");
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(i, j).expect("distinct in-range endpoints");
            }
        }
    }
    g
}

/// Random distinguishing set: add vertices in random order until the set
/// distinguishes, then drop members in random order while it still does.
fn random_distinguishing(rng: &mut ChaCha8Rng, g: &Graph) -> VertexSet {
    let mut order = g.vertices().to_vec();
    order.shuffle(rng);
    let mut s = VertexSet::EMPTY;
    for &v in &order {
        if is_distinguishing(g, s) {
            break;
        }
        s.insert(v);
    }
    order.shuffle(rng);
    for &v in &order {
        if s.contains(v) && rng.gen_bool(0.5) && is_distinguishing(g, s.without(v)) {
            s.remove(v);
        }
    }
    s
}

/// Bipartite instance from `s` distinct random nonempty traces over
/// `U = 0..r`; `U` distinguishes it by construction.
fn random_trace_instance(rng: &mut ChaCha8Rng) -> (Graph, VertexSet) {
    let r = rng.gen_range(2..=5);
    let mut pool: Vec<u64> = (1..1u64 << r).collect();
    pool.shuffle(rng);
    let s = rng.gen_range(2..=pool.len().min(14 - r));
    let mut edges = Vec::new();
    for (j, &mask) in pool[..s].iter().enumerate() {
        edges.extend(VertexSet::from_bits(mask).iter().map(|u| (u, r + j)));
    }
    let g = Graph::new(r + s, &edges).expect("order at most 14");
    (g, VertexSet::full(r))
}

fn random_nonempty_subset(rng: &mut ChaCha8Rng, from: VertexSet) -> VertexSet {
    let members = from.to_vec();
    loop {
        let pick: VertexSet = members.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if !pick.is_empty() || members.is_empty() {
            return pick;
        }
    }
}

fn describe(g: &Graph, s: VertexSet) -> String {
    format!("{} S = {s}", graph6::encode(g))
}

fn parity(seed: u64, trials: usize) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Parity);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let n = rng.gen_range(2..=14);
        let g = random_graph(&mut rng, n);
        let s = random_distinguishing(&mut rng, &g);
        report.checked += 1;
        audit_associated(&mut report, &mut rng, &g, s);
    }
    report
}

fn audit_associated(report: &mut SuiteReport, rng: &mut ChaCha8Rng, g: &Graph, s: VertexSet) {
    let name = || describe(g, s);
    let ag = AssociatedGraph::build(g, s).expect("s distinguishes");
    let k = s.len();

    report.expect(ag.vertices().len() == g.order() - k, || format!("{}: order", name()));

    // levels: adjacent levels only, binomial capacity
    report.expect(
        ag.edges().iter().all(|e| ag.level(e.x).abs_diff(ag.level(e.y)) == 1),
        || format!("{}: edge joins levels of equal parity", name()),
    );
    let levels = ag.levels();
    let over_capacity = levels
        .iter()
        .enumerate()
        .any(|(j, at)| at.len() as u128 > binomial(k, j));
    report.expect(!over_capacity, || format!("{}: level over capacity", name()));

    // no two edges at a vertex share a label
    let clash = ag.vertices().iter().any(|x| {
        let mut seen = VertexSet::EMPTY;
        ag.edges()
            .iter()
            .filter(|e| e.x == x || e.y == x)
            .any(|e| {
                let repeat = seen.contains(e.label);
                seen.insert(e.label);
                repeat
            })
    });
    report.expect(!clash, || format!("{}: incident edges share a label", name()));

    report.expect(ag.parity_audit(), || format!("{}: odd label on a cycle", name()));

    // the complement has the same associated graph with reversed levels
    let bar = AssociatedGraph::build(&g.complement(), s).expect("distinguishing is complement-invariant");
    report.expect(bar.vertices() == ag.vertices() && bar.edges() == ag.edges(), || {
        format!("{}: complement changes the associated graph", name())
    });
    report.expect(
        ag.vertices().iter().all(|x| bar.level(x) == k - ag.level(x)),
        || format!("{}: complement levels are not reversed", name()),
    );

    // a label on some edge is needed to distinguish
    for u in ag.label_multiplicity().into_iter().filter(|&(_, m)| m > 0).map(|(u, _)| u) {
        report.expect(!is_distinguishing(g, s.without(u)), || {
            format!("{}: S - {u} still distinguishes", name())
        });
    }

    if !s.is_empty() {
        let s_prime = random_nonempty_subset(rng, s);
        let sub = ag.label_subgraph(s_prime).expect("nonempty subset of S");
        report.expect(sub.component_trace_check(), || {
            format!("{}: components of H_{s_prime} disagree on S - S'", name())
        });
    }

    if let Some(path) = random_climb(rng, &ag) {
        report.expect(ag.path_label_audit(&path) == Ok(true), || {
            let labels: Vec<String> = path.iter().map(|&x| trace_label(ag.trace(x))).collect();
            format!("{}: climbing path {} fails the label audit", name(), labels.join(" "))
        });
    }

    if let Some((start, end, odd)) = random_trail(rng, &ag) {
        report.expect(start == end || !odd.is_empty(), || {
            format!("{}: open trail {start} -> {end} with every label even", name())
        });
        report.expect(start != end || odd.is_empty(), || {
            format!("{}: closed trail with odd labels {odd}", name())
        });
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Random path that goes up one level per step.
fn random_climb(rng: &mut ChaCha8Rng, ag: &AssociatedGraph) -> Option<Vec<usize>> {
    let start = *ag.vertices().to_vec().choose(rng)?;
    let graph = ag.as_graph();
    let mut path = vec![start];
    loop {
        let here = *path.last().unwrap();
        let up: Vec<usize> = graph
            .neighbors(here)
            .iter()
            .filter(|&y| ag.level(y) == ag.level(here) + 1)
            .collect();
        match up.choose(rng) {
            Some(&next) if rng.gen_bool(0.8) => path.push(next),
            _ => return Some(path),
        }
    }
}

/// Random walk that never reuses an edge. Returns its endpoints and the set
/// of labels it used an odd number of times.
fn random_trail(rng: &mut ChaCha8Rng, ag: &AssociatedGraph) -> Option<(usize, usize, VertexSet)> {
    let edges = ag.edges();
    let first = *edges.choose(rng)?;
    let mut used = vec![false; edges.len()];
    let start = first.x;
    let mut here = start;
    let mut odd = VertexSet::EMPTY;
    let steps = rng.gen_range(1..=2 * edges.len());
    for _ in 0..steps {
        let open: Vec<usize> = (0..edges.len())
            .filter(|&i| !used[i] && (edges[i].x == here || edges[i].y == here))
            .collect();
        let Some(&i) = open.choose(rng) else { break };
        used[i] = true;
        odd = odd ^ VertexSet::singleton(edges[i].label);
        here = if edges[i].x == here { edges[i].y } else { edges[i].x };
    }
    Some((start, here, odd))
}

fn cactus(seed: u64, trials: usize) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Cactus);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while report.checked < trials {
        let (g, s) = if rng.gen_bool(0.5) {
            random_trace_instance(&mut rng)
        } else {
            let n = rng.gen_range(4..=14);
            let g = random_graph(&mut rng, n);
            let s = random_distinguishing(&mut rng, &g);
            (g, s)
        };
        let ag = AssociatedGraph::build(&g, s).expect("s distinguishes");
        let doubled: VertexSet = ag
            .label_multiplicity()
            .into_iter()
            .filter(|&(_, m)| m >= 2)
            .map(|(u, _)| u)
            .collect();
        if doubled.is_empty() {
            continue;
        }
        report.checked += 1;
        audit_two_per_label(&mut report, &mut rng, &g, &ag, doubled);
    }
    report
}

fn audit_two_per_label(
    report: &mut SuiteReport,
    rng: &mut ChaCha8Rng,
    g: &Graph,
    ag: &AssociatedGraph,
    doubled: VertexSet,
) {
    let s_prime = random_nonempty_subset(rng, doubled);
    let mut positions = Vec::new();
    for u in s_prime {
        let carrying: Vec<usize> = (0..ag.edges().len()).filter(|&i| ag.edges()[i].label == u).collect();
        positions.extend(carrying.choose_multiple(rng, 2));
    }
    let h = ag.edge_subgraph(&positions);
    let stats = h.cactus_stats();
    let name = || format!("{} S' = {s_prime}", describe(g, ag.base()));
    let r_prime = s_prime.len();

    report.expect(stats.is_cactus, || format!("{}: a component is not a cactus", name()));
    report.expect(stats.vertices >= 4, || format!("{}: fewer than 4 vertices", name()));
    // |V| >= 3|E|/4 + cc and |V| >= 3r'/2 + 1, cleared of fractions
    report.expect(4 * stats.vertices >= 3 * stats.edges + 4 * stats.cc, || {
        format!("{}: order below 3|E|/4 + cc ({stats:?})", name())
    });
    report.expect(2 * stats.vertices >= 3 * r_prime + 2, || {
        format!("{}: order below 3r'/2 + 1 ({stats:?})", name())
    });
    report.expect(stats.ex >= 0, || format!("{}: negative excess", name()));

    // |V| - cc never grows along a chain of vertex and edge deletions
    let incident = h.incident_vertices();
    let mut current = ag.as_graph().induced(ag.vertices());
    let mut score = rank(&current);
    let full = ag.label_subgraph(s_prime).expect("labels of S");
    report.expect(
        rank(&full.as_graph().induced(full.incident_vertices())) >= rank(&h.as_graph().induced(incident)),
        || format!("{}: H has larger |V| - cc than H_S'", name()),
    );
    while current.order() > 0 {
        if current.edge_count() > 0 && rng.gen_bool(0.6) {
            let edges: Vec<(usize, usize)> = current.edges().collect();
            let &(a, b) = edges.choose(rng).unwrap();
            current.remove_edge(a, b);
        } else {
            let drop = rng.gen_range(0..current.order());
            current = current.induced(current.vertices().without(drop));
        }
        let next = rank(&current);
        report.expect(next <= score, || format!("{}: |V| - cc grew under deletion", name()));
        score = next;
    }
}

fn rank(g: &Graph) -> usize {
    g.order() - g.connected_components().len()
}
