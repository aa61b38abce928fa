//! Condition auditors for each stage of the construction.
//!
//! Every check recomputes weighted degrees and edge profiles from the raw
//! edge weights instead of reading the construction's caches.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::graph::Vertex;
use crate::rational::{format_rational, int, Rational};
use crate::weighter::state::WeightState;

use super::proper::weighted_degrees;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditStage {
    /// After the bipartite base case.
    Lemma3,
    PostPhase1,
    PostPhase2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub vertices: Vec<Vertex>,
    pub values: Vec<String>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub name: String,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub stage: AuditStage,
    pub conditions: Vec<ConditionReport>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.conditions.iter().all(|c| c.passed)
    }

    pub fn condition(&self, name: &str) -> Option<&ConditionReport> {
        self.conditions.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConditionReport> {
        self.conditions.iter().filter(|c| !c.passed)
    }

    pub fn summary(&self) -> String {
        let failed: Vec<String> = self
            .failures()
            .map(|c| match c.witnesses.first() {
                Some(w) => format!("{} (vertices {:?}: {})", c.name, w.vertices, w.note),
                None => c.name.clone(),
            })
            .collect();
        if failed.is_empty() {
            format!("{:?}: all conditions hold", self.stage)
        } else {
            format!("{:?}: failed {}", self.stage, failed.join("; "))
        }
    }
}

/// Fresh weighted degrees and edge profiles derived from the raw weights.
pub(crate) struct Snapshot<'a, 'g> {
    pub state: &'a WeightState<'g>,
    pub dw: Vec<Rational>,
    pub d2_up: Vec<usize>,
    pub neg_base: Vec<usize>,
    pub neg_first: Vec<usize>,
}

impl<'a, 'g> Snapshot<'a, 'g> {
    pub fn take(state: &'a WeightState<'g>) -> Self {
        let g = state.graph();
        let w = state.weights();
        let dw = weighted_degrees(g, &w);
        let n = g.n();
        let (mut d2_up, mut neg_base, mut neg_first) = (vec![0; n], vec![0; n], vec![0; n]);
        let neg = -state.d1().clone();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            for (x, y) in [(u, v), (v, u)] {
                let ly = state.layer_of(y);
                if w[e] == *state.d2() && ly >= 1 {
                    d2_up[x] += 1;
                }
                if w[e] == neg && ly == 0 {
                    neg_base[x] += 1;
                }
                if w[e] == neg && ly == 1 {
                    neg_first[x] += 1;
                }
            }
        }
        Self {
            state,
            dw,
            d2_up,
            neg_base,
            neg_first,
        }
    }

    fn at(&self, p: i64, q: i64) -> Rational {
        int(p) * self.state.d2() - int(q) * self.state.d1()
    }

    pub fn is_type_one(&self, v: Vertex) -> bool {
        let i = self.state.layer_of(v);
        i >= 1 && self.d2_up[v] == i - 1 && self.dw[v] == self.at(i as i64 - 1, 0)
    }

    pub fn is_type_two(&self, v: Vertex) -> bool {
        let i = self.state.layer_of(v);
        i >= 1 && self.d2_up[v] == i && self.neg_base[v] == 1 && self.dw[v] == self.at(i as i64, 1)
    }

    pub fn is_type_three(&self, v: Vertex) -> bool {
        let i = self.state.layer_of(v);
        i >= 2
            && self.d2_up[v] == i
            && self.neg_base[v] == 1
            && self.neg_first[v] == 1
            && self.dw[v] == self.at(i as i64, 2)
    }

    pub fn is_hungry(&self, v: Vertex) -> bool {
        let i = self.state.layer_of(v);
        let p = self.d2_up[v];
        i >= 2 && p + 2 <= i && self.dw[v] == self.at(p as i64, 0)
    }

    fn base_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.state
            .graph()
            .neighbors(v)
            .filter(|&u| self.state.layer_of(u) == 0)
            .collect()
    }
}

struct Check {
    name: &'static str,
    witnesses: Vec<Witness>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            witnesses: Vec::new(),
        }
    }

    fn fail(&mut self, vertices: Vec<Vertex>, values: Vec<&Rational>, note: impl Into<String>) {
        self.witnesses.push(Witness {
            vertices,
            values: values.into_iter().map(format_rational).collect(),
            note: note.into(),
        });
    }

    fn done(self) -> ConditionReport {
        ConditionReport {
            name: self.name.to_string(),
            passed: self.witnesses.is_empty(),
            witnesses: self.witnesses,
        }
    }
}

/// Checks the named conditions of `stage` against `state`. Never fails; the
/// report carries witnesses for every violated condition.
pub fn audit(state: &WeightState<'_>, stage: AuditStage) -> AuditReport {
    let snap = Snapshot::take(state);
    let mut conditions = vec![cache_check(state)];
    conditions.extend(match stage {
        AuditStage::Lemma3 => lemma3_conditions(&snap),
        AuditStage::PostPhase1 => phase1_conditions(&snap),
        AuditStage::PostPhase2 => phase2_conditions(&snap),
    });
    AuditReport { stage, conditions }
}

fn cache_check(state: &WeightState<'_>) -> ConditionReport {
    let mut c = Check::new("weighted-degree-cache");
    if let Err(msg) = state.check_caches() {
        c.fail(vec![], vec![], msg);
    }
    c.done()
}

fn vertices_in(snap: &Snapshot<'_, '_>, pred: impl Fn(usize) -> bool) -> Vec<Vertex> {
    (0..snap.state.graph().n()).filter(|&v| pred(snap.state.layer_of(v))).collect()
}

fn lemma3_conditions(snap: &Snapshot<'_, '_>) -> Vec<ConditionReport> {
    let (d1, d2) = (snap.state.d1(), snap.state.d2());
    let low = -int(3) * d1;
    let gap = d2 - d1;
    let mut top = Check::new("second-side-degrees");
    for x in vertices_in(snap, |l| l == 1) {
        if snap.dw[x] != low && snap.dw[x] != *d2 {
            top.fail(vec![x], vec![&snap.dw[x]], "weighted degree is neither -3*d1 nor d2");
        }
    }
    let mut base = Check::new("first-side-degrees");
    for y in vertices_in(snap, |l| l == 0) {
        if snap.dw[y] >= gap || snap.dw[y] == low {
            base.fail(vec![y], vec![&snap.dw[y]], "weighted degree not in (-inf, d2-d1) minus {-3*d1}");
        }
    }
    vec![top.done(), base.done()]
}

fn phase1_conditions(snap: &Snapshot<'_, '_>) -> Vec<ConditionReport> {
    let g = snap.state.graph();
    let mut typed = Check::new("upper-layers-type-i-or-ii");
    for v in vertices_in(snap, |l| l >= 1) {
        if !snap.is_type_one(v) && !snap.is_type_two(v) {
            typed.fail(vec![v], vec![&snap.dw[v]], format!("layer {} vertex is neither Type I nor Type II", snap.state.layer_of(v)));
        }
    }
    let mut base = Check::new("base-layer-non-positive");
    for y in vertices_in(snap, |l| l == 0) {
        if snap.dw[y] > Rational::zero() {
            base.fail(vec![y], vec![&snap.dw[y]], "positive weighted degree in layer 0");
        }
    }
    let mut pairs = Check::new("no-adjacent-type-i");
    for v in vertices_in(snap, |l| l == 1) {
        if !snap.is_type_one(v) {
            continue;
        }
        for u in g.neighbors(v) {
            if snap.state.layer_of(u) >= 2 && snap.is_type_one(u) {
                pairs.fail(vec![v, u], vec![&snap.dw[v], &snap.dw[u]], "Type I vertex of layer 1 next to a Type I vertex above");
            }
        }
    }
    vec![typed.done(), base.done(), pairs.done()]
}

fn phase2_conditions(snap: &Snapshot<'_, '_>) -> Vec<ConditionReport> {
    let (d1, d2) = (snap.state.d1().clone(), snap.state.d2().clone());
    let gap = &d2 - &d1;
    let minus3 = -int(3) * &d1;
    let minus1 = -d1.clone();
    let zero = Rational::zero();

    let mut upper = Check::new("upper-layers-typed");
    for v in vertices_in(snap, |l| l >= 2) {
        if !(snap.is_type_one(v) || snap.is_type_two(v) || snap.is_type_three(v)) {
            let i = snap.state.layer_of(v);
            upper.fail(vec![v], vec![&snap.dw[v]], format!("layer {i} vertex is not Type I, II or III"));
        }
    }
    let mut first = Check::new("first-layer-degrees");
    let allowed = [minus3.clone(), minus1.clone(), zero.clone(), gap.clone()];
    for x in vertices_in(snap, |l| l == 1) {
        if !allowed.contains(&snap.dw[x]) {
            first.fail(vec![x], vec![&snap.dw[x]], "layer 1 weighted degree outside {-3d1, -d1, 0, d2-d1}");
        }
    }
    let mut base = Check::new("base-layer-below-gap");
    for y in vertices_in(snap, |l| l == 0) {
        if snap.dw[y] >= gap {
            base.fail(vec![y], vec![&snap.dw[y]], "layer 0 weighted degree not below d2-d1");
        }
    }
    let mut triple = Check::new("triple-negative-neighbors");
    let mut single = Check::new("single-negative-anchor");
    let mut zeroes = Check::new("zero-degree-neighbors");
    for x in vertices_in(snap, |l| l == 1) {
        let ys = snap.base_neighbors(x);
        if snap.dw[x] == minus3 {
            if ys.len() < 2 {
                triple.fail(vec![x], vec![&snap.dw[x]], "fewer than two neighbours in layer 0");
            }
            for &y in &ys {
                if snap.dw[y] >= gap || snap.dw[y] == minus3 {
                    triple.fail(vec![x, y], vec![&snap.dw[x], &snap.dw[y]], "layer 0 neighbour not in (-inf, d2-d1) minus {-3d1}");
                }
            }
        } else if snap.dw[x] == minus1 {
            if ys.len() != 1 || snap.dw[ys[0]] != zero {
                let vals: Vec<&Rational> = ys.iter().map(|&y| &snap.dw[y]).collect();
                let mut vs = vec![x];
                vs.extend(&ys);
                single.fail(vs, vals, "needs exactly one layer 0 neighbour, of weighted degree 0");
            }
        } else if snap.dw[x] == zero {
            for &y in &ys {
                if snap.dw[y] >= gap || snap.dw[y] == zero {
                    zeroes.fail(vec![x, y], vec![&snap.dw[y]], "layer 0 neighbour not in (-inf, d2-d1) minus {0}");
                }
            }
        }
    }
    vec![upper.done(), first.done(), base.done(), triple.done(), single.done(), zeroes.done()]
}

/// Loop invariants that must hold right before layer `i` is processed in the
/// downward sweep of the first phase.
pub(crate) fn phase1_step_violations(state: &WeightState<'_>, i: usize) -> Vec<String> {
    let snap = Snapshot::take(state);
    let g = state.graph();
    let mut out = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let low = |x: Vertex| (1..=i).contains(&state.layer_of(x));
        if state.touched(e) && (low(u) || low(v)) {
            out.push(format!("edge ({u}, {v}) touches layers 1..={i} but is already weighted"));
        }
    }
    for v in 0..g.n() {
        let a = state.layer_of(v);
        if a < i + 1 {
            continue;
        }
        if !(snap.is_type_one(v) || snap.is_type_two(v) || snap.is_hungry(v)) {
            out.push(format!("vertex {v} of layer {a} is not Type I, Type II or hungry"));
        }
        if a >= i + 2 && snap.is_hungry(v) {
            for beta in i + 1..a {
                let hit = g.incident(v).iter().any(|&(u, e)| {
                    state.layer_of(u) == beta && state.weight(e) == *state.d2()
                });
                if !hit {
                    out.push(format!("hungry vertex {v} of layer {a} has no d2 edge into layer {beta}"));
                }
            }
        }
    }
    out
}

/// Loop invariants of the second phase before the next vertex is handled.
pub(crate) fn phase2_step_violations(
    state: &WeightState<'_>,
    unprocessed: &BTreeSet<Vertex>,
    processed: &[Vertex],
) -> Vec<String> {
    let snap = Snapshot::take(state);
    let g = state.graph();
    let gap = state.d2() - state.d1();
    let minus3 = -int(3) * state.d1();
    let mut out = Vec::new();
    for &x in unprocessed {
        if g.incident(x).iter().any(|&(_, e)| state.touched(e)) {
            out.push(format!("unprocessed vertex {x} already has a weighted edge"));
        }
    }
    for y in vertices_in(&snap, |l| l == 0) {
        if snap.dw[y] >= gap {
            out.push(format!("layer 0 vertex {y} reached {}", snap.dw[y]));
        }
    }
    for &x in processed {
        let ok = snap.dw[x] == gap
            || (snap.dw[x] == minus3 && snap.base_neighbors(x).iter().all(|&y| snap.dw[y] < gap && snap.dw[y] != minus3));
        if !ok {
            out.push(format!("processed vertex {x} has weighted degree {} with unsafe neighbours", snap.dw[x]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::partition::layered_partition;

    #[test]
    fn all_zero_state_fails_phase2_conditions() {
        let g = Graph::complete(4);
        let s = WeightState::new(&g, layered_partition(&g), int(1), int(2)).unwrap();
        let r = audit(&s, AuditStage::PostPhase2);
        assert!(!r.passed());
        let c = r.condition("upper-layers-typed").unwrap();
        assert!(!c.passed);
        // Layer 2 and 3 singletons sit at 0, outside the allowed values.
        let bad: Vec<_> = c.witnesses.iter().flat_map(|w| w.vertices.clone()).collect();
        assert_eq!(bad, vec![2, 3]);
        assert!(r.condition("weighted-degree-cache").unwrap().passed);
    }
}
