//! Serializable record of a finished weighting.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rational::{format_rational, parse_rational, Rational, WeightSet};
use crate::verifier::{verify_proper, weighted_degrees, AuditReport, ConflictReport};
use crate::weighter::log::ConstructionLog;
use crate::weighter::{Branch, Construction};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedEdge {
    pub u: Vertex,
    pub v: Vertex,
    pub weight: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph: GraphSummary,
    pub weight_set: WeightSet,
    pub branch: Branch,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<Construction>,
    /// The `{-d1, 0, d2}` set the construction ran on, when it was shifted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub internal_set: Option<WeightSet>,
    pub edges: Vec<WeightedEdge>,
    pub weighted_degrees: Vec<String>,
    pub verdict: ConflictReport,
    #[serde(default)]
    pub log: ConstructionLog,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub audits: Vec<AuditReport>,
}

impl Certificate {
    /// Verifies `weights` against `g` and `q` and packages the result.
    pub fn build(
        g: &Graph,
        q: &WeightSet,
        weights: &[Rational],
        branch: Branch,
        construction: Option<Construction>,
        log: ConstructionLog,
    ) -> Result<Self> {
        let verdict = verify_proper(g, weights, q)?;
        let dw = weighted_degrees(g, weights);
        Ok(Self {
            graph: GraphSummary {
                n: g.n(),
                m: g.m(),
                sha256: g.fingerprint(),
            },
            weight_set: q.clone(),
            branch,
            construction,
            internal_set: None,
            edges: g
                .edges()
                .iter()
                .zip(weights)
                .map(|(&(u, v), w)| WeightedEdge {
                    u,
                    v,
                    weight: format_rational(w),
                })
                .collect(),
            weighted_degrees: dw.iter().map(format_rational).collect(),
            verdict,
            log,
            audits: Vec::new(),
        })
    }

    pub fn is_proper(&self) -> bool {
        self.verdict.is_proper()
    }

    pub fn weights(&self) -> Result<Vec<Rational>> {
        self.edges
            .iter()
            .map(|e| parse_rational(&e.weight).map_err(|err| Error::Certificate(format!("edge ({}, {}): {err}", e.u, e.v))))
            .collect()
    }

    /// Re-checks this certificate against `g` from scratch: same edges in the
    /// same order, weights inside the declared set, no conflicts.
    pub fn recheck(&self, g: &Graph) -> Result<ConflictReport> {
        if self.edges.len() != g.m() || self.graph.m != g.m() || self.graph.n != g.n() {
            return Err(Error::Certificate(format!(
                "certificate lists {} edges on {} vertices, graph has {} edges on {} vertices",
                self.edges.len(),
                self.graph.n,
                g.m(),
                g.n()
            )));
        }
        for (id, (e, &(u, v))) in self.edges.iter().zip(g.edges()).enumerate() {
            if (e.u.min(e.v), e.u.max(e.v)) != (u, v) {
                return Err(Error::Certificate(format!(
                    "edge {id} is ({}, {}) in the certificate but ({u}, {v}) in the graph",
                    e.u, e.v
                )));
            }
        }
        verify_proper(g, &self.weights()?, &self.weight_set)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Certificate(e.to_string()))
    }
}
