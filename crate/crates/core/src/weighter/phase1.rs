//! First phase: lift every vertex outside the base layer to Type I or Type II
//! while keeping the base layer at or below zero, then break up adjacent
//! Type I pairs between layer 1 and the layers above it.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::partition::degeneracy::{color_count, degeneracy_coloring};
use crate::partition::saturating_matching;
use crate::verifier::audit::phase1_step_violations;

use super::log::{ConstructionLog, Milestone};
use super::state::{Level, VertexType, WeightState};

pub fn phase1(state: &mut WeightState<'_>, log: &mut ConstructionLog, check_steps: bool) -> Result<()> {
    let last = state
        .partition()
        .last()
        .filter(|&l| l >= 2)
        .ok_or_else(|| Error::Precondition("first phase needs at least three layers".into()))?;
    if (0..state.graph().m()).any(|e| state.touched(e)) {
        return Err(Error::Precondition("first phase starts from an untouched weighting".into()));
    }

    let top = match_and_set(state, last - 1, last, Level::Positive, log, "top")?;
    if last == 2 {
        let saturated = VertexSet::from_iter_in(state.graph().n(), top);
        match_and_set_sets(state, 0, &saturated, Level::Negative, log, "base-to-layer-1")?;
    } else {
        for i in (1..=last - 2).rev() {
            if check_steps {
                let v = phase1_step_violations(state, i);
                if !v.is_empty() {
                    return Err(Error::Invariant(format!("before layer {i}: {}", v.join("; "))));
                }
            }
            lift_layer(state, i, log)?;
        }
    }
    repair_type_one_pairs(state, log)
}

/// Weights a matching of `G[layer a, layer b]` saturating layer `b` and
/// returns the matched vertices of layer `a`.
fn match_and_set(
    state: &mut WeightState<'_>,
    a: usize,
    b: usize,
    level: Level,
    log: &mut ConstructionLog,
    label: &str,
) -> Result<Vec<usize>> {
    let side_b = state.layer(b).clone();
    match_and_set_sets(state, a, &side_b, level, log, label)
}

fn match_and_set_sets(
    state: &mut WeightState<'_>,
    a: usize,
    side_b: &VertexSet,
    level: Level,
    log: &mut ConstructionLog,
    label: &str,
) -> Result<Vec<usize>> {
    let m = saturating_matching(state.graph(), state.layer(a), side_b).map_err(|f| f.at_layer(a))?;
    for &e in &m.edges {
        if state.touched(e) {
            return Err(Error::Invariant(format!("matching edge {e} ({label}) is already weighted")));
        }
        state.set(e, level);
    }
    log.push(Milestone::Matching {
        label: label.to_string(),
        size: m.len(),
    });
    let mut partners: Vec<usize> = m.pairs.iter().map(|&(_, p)| p).collect();
    partners.sort_unstable();
    Ok(partners)
}

fn lift_layer(state: &mut WeightState<'_>, i: usize, log: &mut ConstructionLog) -> Result<()> {
    let g = state.graph();
    let upper = state.partition().union_from(i + 1);

    // Join hungry pairs, re-reading hungriness after every assignment.
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if upper.contains(u)
            && upper.contains(v)
            && state.level(e) == Level::Zero
            && state.classify(u).is_hungry()
            && state.classify(v).is_hungry()
        {
            state.set(e, Level::Positive);
        }
    }

    let hungry = VertexSet::from_iter_in(g.n(), upper.iter().filter(|&v| state.classify(v).is_hungry()));
    let (sub, map) = g.induced(&hungry);
    let colors = degeneracy_coloring(&sub);
    let r = color_count(&colors);
    log.push(Milestone::Coloring {
        layer: i,
        hungry: hungry.len(),
        colors: r,
    });
    if r > i {
        return Err(Error::Invariant(format!(
            "hungry vertices above layer {i} need {r} colours, more than {i}"
        )));
    }
    for t in 0..r {
        let class = VertexSet::from_iter_in(g.n(), map.iter().zip(&colors).filter(|&(_, &c)| c == t).map(|(&v, _)| v));
        match_and_set_sets(state, i, &class, Level::Positive, log, &format!("layer-{i}-class-{t}"))?;
    }

    let full = state.combo(i as i64, 0);
    let saturated_full =
        VertexSet::from_iter_in(g.n(), state.layer(i).iter().filter(|&v| *state.dw(v) == full));
    match_and_set_sets(state, 0, &saturated_full, Level::Negative, log, &format!("base-to-layer-{i}"))?;
    Ok(())
}

/// Turns each Type I vertex of layer 1 with a Type I neighbour higher up,
/// together with that neighbour, into Type II.
fn repair_type_one_pairs(state: &mut WeightState<'_>, log: &mut ConstructionLog) -> Result<()> {
    let g = state.graph();
    let mut count = 0;
    loop {
        let pair = state.layer(1).iter().filter(|&v| state.classify(v) == VertexType::TypeI).find_map(|v| {
            g.incident(v)
                .iter()
                .find(|&&(u, _)| state.layer_of(u) >= 2 && state.classify(u) == VertexType::TypeI)
                .map(|&(u, e)| (v, u, e))
        });
        let Some((v, u, uv)) = pair else {
            break;
        };
        let base_edge = |x: usize| {
            state
                .base_neighbors(x)
                .next()
                .map(|(_, e)| e)
                .ok_or_else(|| Error::Invariant(format!("vertex {x} has no neighbour in layer 0")))
        };
        let (ev, eu) = (base_edge(v)?, base_edge(u)?);
        for e in [ev, eu, uv] {
            if state.level(e) != Level::Zero {
                return Err(Error::Invariant(format!("repair edge {e} is already weighted")));
            }
        }
        state.set(ev, Level::Negative);
        state.set(eu, Level::Negative);
        state.set(uv, Level::Positive);
        count += 1;
    }
    log.push(Milestone::TypeOneRepairs { count });
    Ok(())
}
