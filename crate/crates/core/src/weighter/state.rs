//! Partial `{-d1, 0, d2}` weightings with cached weighted degrees and the
//! per-vertex edge profile the two-phase construction classifies by.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::partition::LayeredPartition;
use crate::rational::{int, Rational};

/// One of the three weights of `{-d1, 0, d2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Level {
    Negative,
    Zero,
    Positive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexType {
    TypeI,
    TypeII,
    TypeIII,
    /// Weighted degree `p * d2` with `p <= layer - 2`.
    Hungry(usize),
    Unclassified,
}

impl VertexType {
    pub fn is_hungry(self) -> bool {
        matches!(self, VertexType::Hungry(_))
    }
}

#[derive(Clone, Debug)]
pub struct WeightState<'g> {
    graph: &'g Graph,
    partition: LayeredPartition,
    d1: Rational,
    d2: Rational,
    levels: Vec<Level>,
    touched: Vec<bool>,
    dw: Vec<Rational>,
    /// Incident `d2` edges whose other end lies in a layer >= 1.
    d2_up: Vec<usize>,
    /// Incident `-d1` edges whose other end lies in layer 0.
    neg_to_base: Vec<usize>,
    /// Incident `-d1` edges whose other end lies in layer 1.
    neg_to_first: Vec<usize>,
}

impl<'g> WeightState<'g> {
    /// All edges at weight 0 and untouched. Requires `0 < d1 < d2`.
    pub fn new(graph: &'g Graph, partition: LayeredPartition, d1: Rational, d2: Rational) -> Result<Self> {
        check_gaps(&d1, &d2)?;
        let n = graph.n();
        Ok(Self {
            graph,
            partition,
            d1,
            d2,
            levels: vec![Level::Zero; graph.m()],
            touched: vec![false; graph.m()],
            dw: vec![Rational::zero(); n],
            d2_up: vec![0; n],
            neg_to_base: vec![0; n],
            neg_to_first: vec![0; n],
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn partition(&self) -> &LayeredPartition {
        &self.partition
    }

    pub fn d1(&self) -> &Rational {
        &self.d1
    }

    pub fn d2(&self) -> &Rational {
        &self.d2
    }

    pub fn layer_of(&self, v: Vertex) -> usize {
        self.partition.layer_of(v)
    }

    pub fn layer(&self, i: usize) -> &VertexSet {
        self.partition.layer(i)
    }

    pub fn level(&self, e: EdgeId) -> Level {
        self.levels[e]
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn touched(&self, e: EdgeId) -> bool {
        self.touched[e]
    }

    pub fn dw(&self, v: Vertex) -> &Rational {
        &self.dw[v]
    }

    pub fn d2_up(&self, v: Vertex) -> usize {
        self.d2_up[v]
    }

    pub fn neg_to_base(&self, v: Vertex) -> usize {
        self.neg_to_base[v]
    }

    pub fn neg_to_first(&self, v: Vertex) -> usize {
        self.neg_to_first[v]
    }

    pub fn value(&self, level: Level) -> Rational {
        match level {
            Level::Negative => -self.d1.clone(),
            Level::Zero => Rational::zero(),
            Level::Positive => self.d2.clone(),
        }
    }

    pub fn weight(&self, e: EdgeId) -> Rational {
        self.value(self.levels[e])
    }

    /// Rational weight of every edge, by edge id.
    pub fn weights(&self) -> Vec<Rational> {
        (0..self.levels.len()).map(|e| self.weight(e)).collect()
    }

    /// `p * d2 - q * d1`.
    pub fn combo(&self, p: i64, q: i64) -> Rational {
        int(p) * &self.d2 - int(q) * &self.d1
    }

    pub fn set(&mut self, e: EdgeId, level: Level) {
        let old = self.levels[e];
        let (u, v) = self.graph.edge(e);
        self.account(u, v, old, -1);
        self.account(v, u, old, -1);
        let delta = self.value(level) - self.value(old);
        self.dw[u] += &delta;
        self.dw[v] += &delta;
        self.levels[e] = level;
        self.touched[e] = true;
        self.account(u, v, level, 1);
        self.account(v, u, level, 1);
    }

    fn account(&mut self, x: Vertex, y: Vertex, level: Level, sign: isize) {
        let bump = |c: &mut usize| *c = c.checked_add_signed(sign).expect("counter underflow");
        let ly = self.partition.layer_of(y);
        match level {
            Level::Positive if ly >= 1 => bump(&mut self.d2_up[x]),
            Level::Negative if ly == 0 => bump(&mut self.neg_to_base[x]),
            Level::Negative if ly == 1 => bump(&mut self.neg_to_first[x]),
            _ => {}
        }
    }

    pub fn classify(&self, v: Vertex) -> VertexType {
        let i = self.layer_of(v);
        if i == 0 {
            return VertexType::Unclassified;
        }
        let dw = &self.dw[v];
        let up = self.d2_up[v];
        let i64_ = i as i64;
        if up == i - 1 && *dw == self.combo(i64_ - 1, 0) {
            return VertexType::TypeI;
        }
        if up == i && self.neg_to_base[v] == 1 && *dw == self.combo(i64_, 1) {
            return VertexType::TypeII;
        }
        if i >= 2
            && up == i
            && self.neg_to_base[v] == 1
            && self.neg_to_first[v] == 1
            && *dw == self.combo(i64_, 2)
        {
            return VertexType::TypeIII;
        }
        if i >= 2 && up + 2 <= i && *dw == self.combo(up as i64, 0) {
            return VertexType::Hungry(up);
        }
        VertexType::Unclassified
    }

    /// Neighbours of `v` in layer 0, ascending.
    pub fn base_neighbors(&self, v: Vertex) -> impl Iterator<Item = (Vertex, EdgeId)> + '_ {
        self.graph
            .incident(v)
            .iter()
            .copied()
            .filter(|&(u, _)| self.partition.layer_of(u) == 0)
    }

    /// Recomputes every weighted degree and counter from the edge levels and
    /// reports the first mismatch with the caches.
    pub fn check_caches(&self) -> std::result::Result<(), String> {
        let mut fresh = Self::new(self.graph, self.partition.clone(), self.d1.clone(), self.d2.clone())
            .map_err(|e| e.to_string())?;
        for (e, &l) in self.levels.iter().enumerate() {
            if l != Level::Zero {
                fresh.set(e, l);
            }
        }
        for v in 0..self.graph.n() {
            let direct: Rational = self.graph.incident(v).iter().map(|&(_, e)| self.weight(e)).sum();
            if direct != self.dw[v] || fresh.dw[v] != self.dw[v] {
                return Err(format!("weighted degree cache of vertex {v} is {} but the sum is {direct}", self.dw[v]));
            }
            if fresh.d2_up[v] != self.d2_up[v]
                || fresh.neg_to_base[v] != self.neg_to_base[v]
                || fresh.neg_to_first[v] != self.neg_to_first[v]
            {
                return Err(format!("edge-profile counters of vertex {v} are stale"));
            }
        }
        Ok(())
    }
}

pub(crate) fn check_gaps(d1: &Rational, d2: &Rational) -> Result<()> {
    if !(Rational::zero() < *d1 && d1 < d2) {
        return Err(Error::InvalidParameters(format!("need 0 < d1 < d2, got d1 = {d1}, d2 = {d2}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::layered_partition;

    #[test]
    fn caches_follow_assignments() {
        let g = Graph::complete(4);
        let p = layered_partition(&g);
        let mut s = WeightState::new(&g, p, int(1), int(2)).unwrap();
        s.set(0, Level::Positive);
        s.set(1, Level::Negative);
        s.set(0, Level::Negative);
        s.set(5, Level::Positive);
        assert!(s.check_caches().is_ok());
        assert_eq!(*s.dw(0), int(-2));
        assert!(s.touched(0));
        assert!(!s.touched(2));
    }

    #[test]
    fn rejects_bad_gaps() {
        let g = Graph::complete(4);
        let p = layered_partition(&g);
        assert!(WeightState::new(&g, p.clone(), int(2), int(2)).is_err());
        assert!(WeightState::new(&g, p, int(0), int(2)).is_err());
    }

    #[test]
    fn classification_on_k4() {
        // K4 layers are the singletons {0}, {1}, {2}, {3}.
        let g = Graph::complete(4);
        let p = layered_partition(&g);
        let mut s = WeightState::new(&g, p, int(1), int(2)).unwrap();
        assert_eq!(s.classify(0), VertexType::Unclassified);
        assert_eq!(s.classify(1), VertexType::TypeI);
        assert_eq!(s.classify(2), VertexType::Hungry(0));
        assert_eq!(s.classify(3), VertexType::Hungry(0));
        let e23 = g.edge_id(2, 3).unwrap();
        s.set(e23, Level::Positive);
        assert_eq!(s.classify(2), VertexType::TypeI);
        assert_eq!(s.classify(3), VertexType::Hungry(1));
        let e03 = g.edge_id(0, 3).unwrap();
        let e13 = g.edge_id(1, 3).unwrap();
        s.set(e13, Level::Positive);
        assert_eq!(s.classify(3), VertexType::TypeI);
        s.set(e03, Level::Negative);
        assert_eq!(s.classify(3), VertexType::Unclassified);
        let e12 = g.edge_id(1, 2).unwrap();
        s.set(e12, Level::Positive);
        // Two d2 edges and one -d1 edge: too few d2 edges for Type II in layer 3.
        assert_eq!(s.classify(3), VertexType::Unclassified);
    }
}
