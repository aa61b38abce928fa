use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::rational::{format_rational, Rational, WeightSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conflict {
    pub edge: EdgeId,
    pub u: Vertex,
    pub v: Vertex,
    /// Shared weighted degree, `num/den`.
    pub value: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConflictReport {
    pub edges_checked: usize,
    pub conflict_count: usize,
    pub conflicts: Vec<Conflict>,
}

impl ConflictReport {
    pub fn is_proper(&self) -> bool {
        self.conflicts.is_empty()
    }
}

/// Sum of incident weights, recomputed from scratch.
pub fn weighted_degrees(g: &Graph, w: &[Rational]) -> Vec<Rational> {
    let mut dw = vec![Rational::zero(); g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        dw[u] += &w[e];
        dw[v] += &w[e];
    }
    dw
}

/// Lists every edge whose endpoints share a weighted degree. Every weight
/// must belong to `q`.
pub fn verify_proper(g: &Graph, w: &[Rational], q: &WeightSet) -> Result<ConflictReport> {
    if w.len() != g.m() {
        return Err(Error::InvalidParameters(format!(
            "{} weights for {} edges",
            w.len(),
            g.m()
        )));
    }
    if let Some((edge, value)) = w.iter().enumerate().find(|(_, x)| !q.contains(x)) {
        return Err(Error::WeightOutsideSet {
            edge,
            value: format_rational(value),
        });
    }
    let dw = weighted_degrees(g, w);
    let conflicts: Vec<Conflict> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| dw[u] == dw[v])
        .map(|(edge, &(u, v))| Conflict {
            edge,
            u,
            v,
            value: format_rational(&dw[u]),
        })
        .collect();
    Ok(ConflictReport {
        edges_checked: g.m(),
        conflict_count: conflicts.len(),
        conflicts,
    })
}
