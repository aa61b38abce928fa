//! Second phase: the only conflicts left after the first phase join base
//! vertices at weighted degree 0 to layer 1 vertices at weighted degree 0.
//! Layer 1 vertices with two or more base neighbours are resolved one at a
//! time; those with a single base neighbour are resolved last through a
//! matching into the Type II vertices above layer 1.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Vertex;
use crate::partition::saturating_matching;
use crate::rational::Rational;
use crate::verifier::audit::phase2_step_violations;

use super::log::{ConstructionLog, Milestone, ResolutionCase};
use super::state::{Level, VertexType, WeightState};

pub fn phase2(state: &mut WeightState<'_>, log: &mut ConstructionLog, check_steps: bool) -> Result<()> {
    let g = state.graph();
    let n = g.n();
    let zero = Rational::zero();

    let first_zero: Vec<Vertex> = state.layer(1).iter().filter(|&x| state.dw(x).is_zero()).collect();
    let base_count: BTreeMap<Vertex, usize> =
        first_zero.iter().map(|&x| (x, state.base_neighbors(x).count())).collect();
    let class = |pred: fn(usize) -> bool| -> Vec<Vertex> {
        first_zero.iter().copied().filter(|x| pred(base_count[x])).collect()
    };
    let x1 = class(|c| c == 1);
    let x2 = class(|c| c == 2);
    let x3 = class(|c| c >= 3);
    if let Some(&x) = first_zero.iter().find(|x| base_count[x] == 0) {
        return Err(Error::Invariant(format!("layer 1 vertex {x} has no neighbour in layer 0")));
    }
    let zero_zero_edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| {
            let (lu, lv) = (state.layer_of(u), state.layer_of(v));
            lu.min(lv) == 0 && lu.max(lv) == 1 && state.dw(u).is_zero() && state.dw(v).is_zero()
        })
        .count();
    log.push(Milestone::SecondPhaseClasses {
        one_base_neighbor: x1.len(),
        two_base_neighbors: x2.len(),
        three_plus_base_neighbors: x3.len(),
        zero_zero_edges,
    });
    if zero_zero_edges == 0 {
        return Ok(());
    }

    // Partners above layer 1 for every vertex with one or two base neighbours.
    let needy = VertexSet::from_iter_in(n, x1.iter().chain(&x2).copied());
    let upper = state.partition().union_from(2);
    let m = saturating_matching(g, &upper, &needy)
        .map_err(|f| Error::Invariant(format!("upper-layer matching failed: {f}")))?;
    log.push(Milestone::Matching {
        label: "single-and-double-to-upper".into(),
        size: m.len(),
    });
    for &(x, z) in &m.pairs {
        if state.classify(z) != VertexType::TypeII {
            return Err(Error::Invariant(format!("partner {z} of {x} is not Type II")));
        }
    }

    // Vertices with at least two base neighbours.
    let mut pending: BTreeSet<Vertex> = x2.iter().chain(&x3).copied().collect();
    let mut processed: Vec<Vertex> = Vec::new();
    loop {
        let next = pending
            .iter()
            .copied()
            .find(|&x| state.base_neighbors(x).any(|(y, _)| state.dw(y).is_zero()));
        let Some(x) = next else {
            break;
        };
        if check_steps {
            let v = phase2_step_violations(state, &pending, &processed);
            if !v.is_empty() {
                return Err(Error::Invariant(format!("before resolving {x}: {}", v.join("; "))));
            }
        }
        let before = pending.len();
        let case = resolve_multi(state, x, &m, &base_count)?;
        log.push(Milestone::Resolved { vertex: x, case });
        if state.dw(x).is_zero() {
            return Err(Error::Invariant(format!("vertex {x} still at weighted degree 0")));
        }
        pending.remove(&x);
        processed.push(x);
        debug_assert!(pending.len() < before);
    }
    if check_steps {
        let v = phase2_step_violations(state, &pending, &processed);
        if !v.is_empty() {
            return Err(Error::Invariant(format!("after resolving: {}", v.join("; "))));
        }
    }

    // Single-base-neighbour vertices whose neighbour sits at 0.
    let mut count = 0;
    for &x in &x1 {
        let (y, _) = state.base_neighbors(x).next().expect("counted above");
        if *state.dw(y) != zero {
            continue;
        }
        if g.incident(x).iter().any(|&(_, e)| state.touched(e)) {
            return Err(Error::Invariant(format!("single-neighbour vertex {x} was touched early")));
        }
        let z = m.partner(x).expect("matching saturates single-neighbour vertices");
        let e = g.edge_id(x, z).expect("matched pair is an edge");
        state.set(e, Level::Negative);
        count += 1;
    }
    log.push(Milestone::SingleBaseResolved { count });
    Ok(())
}

fn resolve_multi(
    state: &mut WeightState<'_>,
    x: Vertex,
    m: &crate::partition::Matching,
    base_count: &BTreeMap<Vertex, usize>,
) -> Result<ResolutionCase> {
    let g = state.graph();
    let base: Vec<(Vertex, usize)> = state.base_neighbors(x).collect();
    let anchor = base
        .iter()
        .copied()
        .find(|&(y, _)| state.dw(y).is_zero())
        .expect("selected for a zero neighbour");
    let minus_d1 = -state.d1().clone();
    let skip = state.combo(-1, 3);
    let gap = state.combo(1, 1);

    let raise = base
        .iter()
        .copied()
        .find(|&(y, _)| *state.dw(y) < minus_d1 && *state.dw(y) != skip);
    if let Some((_, e)) = raise {
        state.set(e, Level::Positive);
        state.set(anchor.1, Level::Negative);
        return Ok(ResolutionCase::RaiseOne);
    }

    if let Some(&(y, _)) = base
        .iter()
        .find(|&&(y, _)| !((minus_d1 <= *state.dw(y) && *state.dw(y) < gap) || *state.dw(y) == skip))
    {
        return Err(Error::Invariant(format!(
            "base neighbour {y} of {x} has weighted degree {} outside the expected range",
            state.dw(y)
        )));
    }
    if base_count[&x] >= 3 {
        for &(_, e) in base.iter().take(3) {
            state.set(e, Level::Negative);
        }
        Ok(ResolutionCase::ThreeBase)
    } else {
        let z = m
            .partner(x)
            .ok_or_else(|| Error::Invariant(format!("vertex {x} has no upper partner")))?;
        for &(_, e) in &base {
            state.set(e, Level::Negative);
        }
        state.set(g.edge_id(x, z).expect("matched pair is an edge"), Level::Negative);
        Ok(ResolutionCase::TwoBaseOneUpper)
    }
}
