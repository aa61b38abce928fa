//! Bipartite base case: every vertex of the second side ends at `-3*d1` or
//! `d2`, every vertex of the first side strictly below `d2 - d1` and away from
//! `-3*d1`.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::LayeredPartition;
use crate::rational::{int, Rational};

use super::state::{Level, WeightState};

pub fn weight_bipartite_lemma3<'g>(
    g: &'g Graph,
    i0: &VertexSet,
    i1: &VertexSet,
    d1: Rational,
    d2: Rational,
) -> Result<WeightState<'g>> {
    if i0.intersects(i1) || !g.is_independent(i0) || !g.is_independent(i1) {
        return Err(Error::Precondition("sides must be disjoint independent sets".into()));
    }
    let partition = LayeredPartition::from_layers(g.n(), vec![i0.clone(), i1.clone()])
        .map_err(Error::Precondition)?;
    let mut state = WeightState::new(g, partition, d1, d2)?;
    run(&mut state)?;
    Ok(state)
}

/// Processes the second side (layer 1 of `state`) in ascending order.
pub(crate) fn run(state: &mut WeightState<'_>) -> Result<()> {
    let g = state.graph();
    let second: Vec<usize> = state.layer(1).to_vec();
    if let Some(&x) = second.iter().find(|&&x| g.degree(x) < 3) {
        return Err(Error::Precondition(format!(
            "vertex {x} on the second side has degree {} < 3",
            g.degree(x)
        )));
    }
    let minus_d1 = -state.d1().clone();
    let skip = state.combo(-1, 3);
    for x in second {
        // Case 1: a neighbour in (-inf, -d1) other than -d2-3*d1 absorbs a d2 edge.
        let raise = g
            .incident(x)
            .iter()
            .find(|&&(y, _)| *state.dw(y) < minus_d1 && *state.dw(y) != skip)
            .map(|&(_, e)| e);
        match raise {
            Some(e) => state.set(e, Level::Positive),
            None => {
                for &(_, e) in g.incident(x).iter().take(3) {
                    state.set(e, Level::Negative);
                }
            }
        }
        debug_assert!(*state.dw(x) == *state.d2() || *state.dw(x) == int(-3) * state.d1());
    }
    Ok(())
}
