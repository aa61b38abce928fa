use crate::bitset::VertexSet;
use crate::graph::{Graph, Vertex};

use super::mis::{greedy_independent_set, maximum_independent_set_within};

/// Vertex layers `I_0, ..., I_last`; each layer is a maximum (or, in
/// optimistic mode, maximal) independent set of what the previous layers
/// left behind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayeredPartition {
    layers: Vec<VertexSet>,
    layer_of: Vec<usize>,
    exact: Vec<bool>,
}

/// How each layer's independent set is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MisStrategy {
    Exact,
    Greedy,
}

pub fn layered_partition(g: &Graph) -> LayeredPartition {
    layered_partition_with(g, |_| MisStrategy::Exact)
}

/// Builds the layers, asking `strategy` how to extract layer `i`.
pub fn layered_partition_with(g: &Graph, strategy: impl Fn(usize) -> MisStrategy) -> LayeredPartition {
    let n = g.n();
    let mut rest = VertexSet::full(n);
    let mut layers = Vec::new();
    let mut exact = Vec::new();
    let mut layer_of = vec![usize::MAX; n];
    while !rest.is_empty() {
        let i = layers.len();
        let s = strategy(i);
        let layer = match s {
            MisStrategy::Exact => maximum_independent_set_within(g, &rest),
            MisStrategy::Greedy => greedy_independent_set(g, &rest),
        };
        for v in layer.iter() {
            layer_of[v] = i;
        }
        rest.difference_with(&layer);
        layers.push(layer);
        exact.push(s == MisStrategy::Exact);
    }
    LayeredPartition {
        layers,
        layer_of,
        exact,
    }
}

impl LayeredPartition {
    /// Wraps explicitly given layers (all treated as exact). Fails when they
    /// overlap or miss a vertex.
    pub fn from_layers(n: usize, layers: Vec<VertexSet>) -> Result<Self, String> {
        let mut layer_of = vec![usize::MAX; n];
        for (i, l) in layers.iter().enumerate() {
            for v in l.iter() {
                if layer_of[v] != usize::MAX {
                    return Err(format!("vertex {v} appears in two layers"));
                }
                layer_of[v] = i;
            }
        }
        if let Some(v) = layer_of.iter().position(|&l| l == usize::MAX) {
            return Err(format!("vertex {v} is in no layer"));
        }
        let exact = vec![true; layers.len()];
        Ok(Self {
            layers,
            layer_of,
            exact,
        })
    }

    pub fn layers(&self) -> &[VertexSet] {
        &self.layers
    }

    pub fn layer(&self, i: usize) -> &VertexSet {
        &self.layers[i]
    }

    /// Index of the last nonempty layer (0 for an edgeless graph, which has a
    /// single layer; `None` only for the graph on zero vertices).
    pub fn last(&self) -> Option<usize> {
        self.layers.len().checked_sub(1)
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    pub fn layer_of(&self, v: Vertex) -> usize {
        self.layer_of[v]
    }

    pub fn is_exact(&self, i: usize) -> bool {
        self.exact[i]
    }

    /// `∪_{j >= from} I_j`.
    pub fn union_from(&self, from: usize) -> VertexSet {
        let mut s = VertexSet::new(self.layer_of.len());
        for l in self.layers.iter().skip(from) {
            s.union_with(l);
        }
        s
    }

    /// Structural problems, empty when the partition is sound: layers must be
    /// disjoint, cover every vertex, be independent, and each vertex of the
    /// last layer needs a neighbour in every earlier layer.
    pub fn check(&self, g: &Graph) -> Vec<String> {
        let mut problems = Vec::new();
        let mut seen = VertexSet::new(g.n());
        for (i, l) in self.layers.iter().enumerate() {
            if seen.intersects(l) {
                problems.push(format!("layer {i} overlaps an earlier layer"));
            }
            seen.union_with(l);
            if !g.is_independent(l) {
                problems.push(format!("layer {i} is not independent"));
            }
            if l.is_empty() {
                problems.push(format!("layer {i} is empty"));
            }
        }
        if seen.len() != g.n() {
            problems.push(format!("layers cover {} of {} vertices", seen.len(), g.n()));
        }
        if let Some(last) = self.last() {
            for v in self.layers[last].iter() {
                for (i, l) in self.layers[..last].iter().enumerate() {
                    if !g.neighbor_set(v).intersects(l) {
                        problems.push(format!("vertex {v} of the last layer has no neighbour in layer {i}"));
                    }
                }
            }
        }
        problems
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_has_four_singletons() {
        let g = Graph::complete(4);
        let p = layered_partition(&g);
        assert_eq!(p.len(), 4);
        assert_eq!(p.last(), Some(3));
        assert!(p.layers().iter().all(|l| l.len() == 1));
        assert!(p.check(&g).is_empty());
    }

    #[test]
    fn bipartite_has_two_layers() {
        let g = Graph::complete_bipartite(3, 3);
        let p = layered_partition(&g);
        assert_eq!(p.last(), Some(1));
        assert_eq!(p.layer(0).to_vec(), vec![0, 1, 2]);
        assert_eq!(p.layer(1).to_vec(), vec![3, 4, 5]);

        let c6 = Graph::cycle(6);
        let p = layered_partition(&c6);
        assert_eq!(p.last(), Some(1));
        assert_eq!(p.layer(0).len(), 3);
        assert!(p.check(&c6).is_empty());
    }

    #[test]
    fn petersen_layers() {
        let g = Graph::petersen();
        let p = layered_partition(&g);
        assert!(p.check(&g).is_empty());
        assert_eq!(p.layer(0).len(), 4);
        assert!(p.last().unwrap() <= 4);
    }

    #[test]
    fn greedy_layers_are_sound() {
        let g = Graph::petersen();
        let p = layered_partition_with(&g, |_| MisStrategy::Greedy);
        assert!(p.check(&g).is_empty());
        assert!(!p.is_exact(0));
    }
}
