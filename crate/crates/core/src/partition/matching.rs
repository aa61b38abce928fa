//! Bipartite matchings that saturate one side (Hopcroft-Karp), with Hall
//! violator extraction on failure.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{EdgeId, Graph, Vertex};

/// A matching in `G[side_a, side_b]` covering all of `side_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    /// `(saturated vertex, partner)` in ascending order of the saturated vertex.
    pub pairs: Vec<(Vertex, Vertex)>,
    pub edges: Vec<EdgeId>,
    pub saturated: VertexSet,
}

impl Matching {
    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        self.pairs
            .binary_search_by_key(&v, |&(s, _)| s)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Hall's condition fails: `violator` needs more partners than its
/// neighbourhood on the other side provides.
#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize, Deserialize)]
#[error("no matching saturates the required side: {violator:?} has only {neighborhood:?} as neighbours (layer {layer:?})")]
pub struct SaturationFailure {
    pub violator: Vec<Vertex>,
    pub neighborhood: Vec<Vertex>,
    /// Layer whose maximality the failed matching relied on, when known.
    pub layer: Option<usize>,
}

impl SaturationFailure {
    pub fn at_layer(mut self, layer: usize) -> Self {
        self.layer = Some(layer);
        self
    }
}

const NIL: usize = usize::MAX;

/// Maximum matching of the bipartite graph formed by the edges of `g`
/// between `side_a` and `side_b`; succeeds only if it covers `side_b`.
pub fn saturating_matching(
    g: &Graph,
    side_a: &VertexSet,
    side_b: &VertexSet,
) -> Result<Matching, SaturationFailure> {
    debug_assert!(!side_a.intersects(side_b));
    let bs: Vec<Vertex> = side_b.iter().collect();
    let adj: Vec<Vec<Vertex>> = bs
        .iter()
        .map(|&b| g.neighbors(b).filter(|&a| side_a.contains(a)).collect())
        .collect();
    let mut mate_b = vec![NIL; bs.len()];
    let mut mate_a = vec![NIL; g.n()];
    let mut dist = vec![0usize; bs.len()];

    loop {
        // BFS layering from free b-vertices.
        let mut queue = VecDeque::new();
        for i in 0..bs.len() {
            if mate_b[i] == NIL {
                dist[i] = 0;
                queue.push_back(i);
            } else {
                dist[i] = NIL;
            }
        }
        let mut found = false;
        while let Some(i) = queue.pop_front() {
            for &a in &adj[i] {
                let j = mate_a[a];
                if j == NIL {
                    found = true;
                } else if dist[j] == NIL {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
            }
        }
        if !found {
            break;
        }
        let mut augmented = false;
        for i in 0..bs.len() {
            if mate_b[i] == NIL && augment(i, &adj, &mut mate_b, &mut mate_a, &mut dist) {
                augmented = true;
            }
        }
        if !augmented {
            break;
        }
    }

    if let Some(free) = (0..bs.len()).find(|&i| mate_b[i] == NIL) {
        return Err(hall_violator(free, &bs, &adj, &mate_a));
    }
    let pairs: Vec<(Vertex, Vertex)> = bs.iter().zip(&mate_b).map(|(&b, &a)| (b, a)).collect();
    let edges = pairs
        .iter()
        .map(|&(b, a)| g.edge_id(a, b).expect("matched pair is an edge"))
        .collect();
    Ok(Matching {
        pairs,
        edges,
        saturated: side_b.clone(),
    })
}

fn augment(
    i: usize,
    adj: &[Vec<Vertex>],
    mate_b: &mut [usize],
    mate_a: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for &a in &adj[i] {
        let j = mate_a[a];
        if j == NIL || (dist[j] == dist[i] + 1 && augment(j, adj, mate_b, mate_a, dist)) {
            mate_a[a] = i;
            mate_b[i] = a;
            return true;
        }
    }
    dist[i] = NIL;
    false
}

/// Alternating search from one exposed vertex of a maximum matching. Every
/// reached a-vertex is matched back into the reached b-set, so the reached
/// b-set has strictly more members than its neighbourhood.
fn hall_violator(free: usize, bs: &[Vertex], adj: &[Vec<Vertex>], mate_a: &[usize]) -> SaturationFailure {
    let mut seen_b = vec![false; bs.len()];
    let mut seen_a = std::collections::BTreeSet::new();
    let mut queue = VecDeque::from([free]);
    seen_b[free] = true;
    while let Some(i) = queue.pop_front() {
        for &a in &adj[i] {
            if seen_a.insert(a) {
                let j = mate_a[a];
                debug_assert_ne!(j, NIL, "maximum matching admits no augmenting path");
                if j != NIL && !seen_b[j] {
                    seen_b[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    SaturationFailure {
        violator: (0..bs.len()).filter(|&i| seen_b[i]).map(|i| bs[i]).collect(),
        neighborhood: seen_a.into_iter().collect(),
        layer: None,
    }
}
