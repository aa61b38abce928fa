//! Simple undirected graphs with canonical edge ids.

use std::collections::VecDeque;

use sha2::{Digest, Sha256};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

/// Immutable simple graph.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically; an
/// edge's id is its rank in that order. Every vertex keeps its neighbours in
/// ascending order together with the id of the connecting edge, and a
/// neighbour bitset for fast set algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    incident: Vec<Vec<(Vertex, EdgeId)>>,
    adjacency: Vec<VertexSet>,
}

impl Graph {
    /// Rejects self-loops, duplicate edges (in either orientation) and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut canon: Vec<(Vertex, Vertex)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint >= n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut incident = vec![Vec::new(); n];
        let mut adjacency = vec![VertexSet::new(n); n];
        for (id, &(u, v)) in canon.iter().enumerate() {
            incident[u].push((v, id));
            incident[v].push((u, id));
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        for list in &mut incident {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges: canon,
            incident,
            adjacency,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incident[v].len()
    }

    /// `(neighbour, edge id)` pairs in ascending neighbour order, which is
    /// also ascending edge-id order.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.incident[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.incident[v].iter().map(|&(u, _)| u)
    }

    pub fn neighbor_set(&self, v: Vertex) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adjacency[u].contains(v)
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let (a, b) = (u.min(v), u.max(v));
        self.edges.binary_search(&(a, b)).ok()
    }

    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// `Some(k)` when every vertex has degree `k`. The graph on zero vertices
    /// is reported as 0-regular.
    pub fn regularity(&self) -> Option<usize> {
        let k = self.incident.first().map_or(0, Vec::len);
        self.incident.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn max_degree(&self) -> usize {
        self.incident.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| !self.adjacency[v].intersects(set))
    }

    /// Induced subgraph on `set`; vertex `i` of the result is the `i`-th
    /// smallest member of `set`, and the returned map sends it back.
    pub fn induced(&self, set: &VertexSet) -> (Graph, Vec<Vertex>) {
        let map: Vec<Vertex> = set.iter().collect();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| set.contains(u) && set.contains(v))
            .map(|&(u, v)| (local[u], local[v]));
        let g = Graph::from_edges(map.len(), edges).expect("induced subgraph is simple");
        (g, map)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// First component that is a single edge, if any.
    pub fn k2_component(&self) -> Option<(Vertex, Vertex)> {
        self.edges
            .iter()
            .copied()
            .find(|&(u, v)| self.degree(u) == 1 && self.degree(v) == 1)
    }

    /// SHA-256 over the vertex count and canonical edge list.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("n={}\n", self.n).as_bytes());
        for &(u, v) in &self.edges {
            h.update(format!("{u} {v}\n").as_bytes());
        }
        hex::encode(h.finalize())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Self::from_edges(a + b, edges).expect("complete bipartite graph is simple")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, edges).expect("Petersen graph is simple")
    }

    /// Triangular prism `K3 x K2`.
    pub fn prism() -> Self {
        Self::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
            .expect("prism is simple")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self::from_edges(self.n + other.n, edges).expect("union of simple graphs is simple")
    }
}
