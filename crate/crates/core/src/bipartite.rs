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

//! When does the complement of a connected bipartite graph need one more
//! vertex in its locating-dominating sets?
//!
//! For a connected bipartite graph with stable sides `U`, `W` and
//! `3 <= |U| = r < s = |W|`, `λ(Ḡ) = λ(G) + 1` holds exactly when
//!
//! 1. `W` has no twins,
//! 2. some `w ∈ W` has `N(w) = U`, and
//! 3. every `u ∈ U` labels at least two edges of `G^U`; equivalently,
//!    deleting `u` creates at least two twin pairs inside `W`.
//!
//! With `r <= 2` (beyond `K_2`) or `r = s` the complement never needs more.

use serde::Serialize;

use crate::assoc::AssociatedGraph;
use crate::error::{AnalysisError, GraphError};
use crate::graph::{Bipartition, Graph};
use crate::ld::{is_distinguishing, is_ld_set, lambda_bounded, ld_codes};
use crate::vertex_set::VertexSet;

/// Classification runs the exact search only up to this order by default.
pub const DEFAULT_SOLVER_CAP: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConditionTriple {
    /// `W` has no twins.
    pub c1: bool,
    /// Some `w ∈ W` is adjacent to all of `U`.
    pub c2: bool,
    /// Every `u ∈ U` labels at least two edges of `G^U`.
    pub c3: bool,
    /// Every `u ∈ U` creates at least two new twin pairs in `W` when deleted.
    pub c3_twin_form: bool,
}

impl ConditionTriple {
    pub fn all(&self) -> bool {
        self.c1 && self.c2 && self.c3
    }
}

/// Checks that `bp` really is the bipartition of a connected `g`.
fn validate(g: &Graph, bp: &Bipartition) -> Result<(), AnalysisError> {
    if !g.is_connected() {
        return Err(GraphError::NotConnected.into());
    }
    match Bipartition::for_graph(g, bp.u(), bp.w()) {
        Some(checked) if checked == *bp => Ok(()),
        _ => Err(AnalysisError::BadBipartition),
    }
}

/// Connected bipartite graph and its bipartition.
pub fn bipartition_of(g: &Graph) -> Result<Bipartition, AnalysisError> {
    g.bipartition()?.ok_or(AnalysisError::NotBipartite)
}

/// Pairs of `W` whose `U`-traces differ in exactly `{u}`, counted per `u`.
fn single_difference_counts(g: &Graph, bp: &Bipartition) -> Vec<(usize, usize)> {
    let u_side = bp.u();
    let w: Vec<usize> = bp.w().to_vec();
    let mut counts: Vec<(usize, usize)> = u_side.iter().map(|u| (u, 0)).collect();
    for (a, &x) in w.iter().enumerate() {
        for &y in &w[a + 1..] {
            let diff = (g.neighbors(x) ^ g.neighbors(y)) & u_side;
            if diff.len() == 1 {
                let label = diff.first().unwrap();
                counts.iter_mut().find(|c| c.0 == label).unwrap().1 += 1;
            }
        }
    }
    counts
}

pub fn condition_triple(g: &Graph, bp: &Bipartition) -> Result<ConditionTriple, AnalysisError> {
    validate(g, bp)?;
    let (u_side, w_side) = (bp.u(), bp.w());
    let existing = g.twin_pairs(w_side);

    let c1 = existing.is_empty();
    let c2 = w_side.iter().any(|w| g.neighbors(w) == u_side);

    let c3 = if is_distinguishing(g, u_side) {
        let ag = AssociatedGraph::build(g, u_side).expect("U distinguishes W");
        ag.label_multiplicity().values().all(|&m| m >= 2)
    } else {
        single_difference_counts(g, bp).iter().all(|&(_, m)| m >= 2)
    };

    let c3_twin_form = u_side.iter().all(|u| {
        let created = g
            .isolate(u)
            .twin_pairs(w_side)
            .into_iter()
            .filter(|p| !existing.iter().any(|q| (q.u, q.v) == (p.u, p.v)))
            .count();
        created >= 2
    });

    Ok(ConditionTriple {
        c1,
        c2,
        c3,
        c3_twin_form,
    })
}

/// `⌈3r/2 + 1⌉ <= s <= 2^r - 1`; only defined for `r >= 3`.
pub fn feasibility_window(r: usize, s: usize) -> Result<bool, AnalysisError> {
    if r < 3 {
        return Err(AnalysisError::SmallSide(r));
    }
    let lower = (3 * r).div_ceil(2) + 1;
    let upper = if r >= 64 { u128::MAX } else { (1u128 << r) - 1 };
    Ok(lower <= s && (s as u128) <= upper)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub u: VertexSet,
    pub w: VertexSet,
    /// False when the graph was above the solver cap and only the
    /// conditions were evaluated.
    pub solved: bool,
    pub lambda_g: Option<usize>,
    pub lambda_gbar: Option<usize>,
    /// `λ(Ḡ) - λ(G)`.
    pub relation: Option<i8>,
    pub conditions: ConditionTriple,
    pub predicted_plus_one: bool,
    pub witness_g: Option<VertexSet>,
    pub witness_gbar: Option<VertexSet>,
}

impl ClassificationReport {
    /// Whether the prediction agrees with the computed relation; `None`
    /// for unsolved reports.
    pub fn prediction_holds(&self) -> Option<bool> {
        self.relation.map(|rel| (rel == 1) == self.predicted_plus_one)
    }
}

/// What the characterization predicts for `λ(Ḡ) = λ(G) + 1`.
fn predict(n: usize, r: usize, s: usize, conditions: &ConditionTriple) -> bool {
    if n < 4 {
        // K_2 is the only small bipartite graph whose complement needs more
        (r, s) == (1, 1)
    } else if r <= 2 || r == s {
        false
    } else {
        conditions.all()
    }
}

pub fn classify(g: &Graph) -> Result<ClassificationReport, AnalysisError> {
    classify_with_cap(g, DEFAULT_SOLVER_CAP)
}

pub fn classify_with_cap(g: &Graph, solver_cap: usize) -> Result<ClassificationReport, AnalysisError> {
    let bp = bipartition_of(g)?;
    let conditions = condition_triple(g, &bp)?;
    let n = g.order();
    let (r, s) = (bp.r(), bp.s());
    let mut report = ClassificationReport {
        n,
        r,
        s,
        u: bp.u(),
        w: bp.w(),
        solved: false,
        lambda_g: None,
        lambda_gbar: None,
        relation: None,
        conditions,
        predicted_plus_one: predict(n, r, s, &conditions),
        witness_g: None,
        witness_gbar: None,
    };
    if n > solver_cap {
        return Ok(report);
    }
    let on_g = lambda_bounded(g, n);
    let on_gbar = lambda_bounded(&g.complement(), n);
    let (lambda, lambda_bar) = (on_g.size.unwrap(), on_gbar.size.unwrap());
    report.solved = true;
    report.lambda_g = Some(lambda);
    report.lambda_gbar = Some(lambda_bar);
    report.relation = Some(lambda_bar as i8 - lambda as i8);
    report.witness_g = on_g.witness;
    report.witness_gbar = on_gbar.witness;
    Ok(report)
}

/// For graphs whose complement needs one more vertex: checks
/// `3 <= r < s <= 2^r - 1` and that `U` is the unique LD-code.
///
/// Returns `None` when the relation is not `+1` (or was not computed).
pub fn corollary16_audit(g: &Graph) -> Result<Option<bool>, AnalysisError> {
    let report = classify(g)?;
    unique_code_audit(g, &report)
}

pub(crate) fn unique_code_audit(
    g: &Graph,
    report: &ClassificationReport,
) -> Result<Option<bool>, AnalysisError> {
    if report.relation != Some(1) {
        return Ok(None);
    }
    let (r, s) = (report.r, report.s);
    let window = r >= 3 && r < s && (r >= 64 || (s as u128) < (1u128 << r));
    if !window {
        return Ok(Some(false));
    }
    Ok(Some(ld_codes(g)? == vec![report.u]))
}

/// Given an LD-code, checks that `λ(Ḡ) <= λ(G)` whenever the code meets
/// both sides, or `r < s` and the code is `W`, or `2^r <= s`.
pub fn lemma13_audit(g: &Graph, code: VertexSet) -> Result<bool, AnalysisError> {
    let report = classify(g)?;
    code_side_audit(g, code, &report)
}

pub(crate) fn code_side_audit(
    g: &Graph,
    code: VertexSet,
    report: &ClassificationReport,
) -> Result<bool, AnalysisError> {
    let Some(lambda) = report.lambda_g else {
        return Err(GraphError::TooManyVertices(report.n).into());
    };
    if code.len() != lambda || !is_ld_set(g, code) {
        return Err(AnalysisError::NotACode);
    }
    let (r, s) = (report.r, report.s);
    let mixed = !code.is_disjoint(report.u) && !code.is_disjoint(report.w);
    let is_w = r < s && code == report.w;
    let crowded = r < 64 && (1u128 << r) <= s as u128;
    let premise = mixed || is_w || crowded;
    Ok(!premise || report.relation.unwrap() <= 0)
}
