use serde::{Deserialize, Serialize};

use crate::graph::Vertex;
use crate::verifier::AuditStage;

/// What happened to a second-phase vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResolutionCase {
    /// One `d2` edge to a sufficiently negative base vertex plus one `-d1` edge.
    RaiseOne,
    /// Three `-d1` edges into the base layer.
    ThreeBase,
    /// Two `-d1` edges into the base layer and one to the matched upper vertex.
    TwoBaseOneUpper,
}

/// Deterministic record of the construction's milestones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "kebab-case")]
pub enum Milestone {
    Partition {
        layer_sizes: Vec<usize>,
        exact_layers: Vec<usize>,
    },
    /// Optimistic mode hit a failed matching and recomputed `layer` exactly.
    ExactRetry {
        layer: usize,
        violator: Vec<Vertex>,
    },
    Matching {
        label: String,
        size: usize,
    },
    Coloring {
        layer: usize,
        hungry: usize,
        colors: usize,
    },
    TypeOneRepairs {
        count: usize,
    },
    SecondPhaseClasses {
        one_base_neighbor: usize,
        two_base_neighbors: usize,
        three_plus_base_neighbors: usize,
        zero_zero_edges: usize,
    },
    Resolved {
        vertex: Vertex,
        case: ResolutionCase,
    },
    SingleBaseResolved {
        count: usize,
    },
    Audit {
        stage: AuditStage,
        passed: bool,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionLog {
    pub milestones: Vec<Milestone>,
}

impl ConstructionLog {
    pub fn push(&mut self, m: Milestone) {
        self.milestones.push(m);
    }

    pub fn colorings(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.milestones.iter().filter_map(|m| match *m {
            Milestone::Coloring { layer, hungry, colors } => Some((layer, hungry, colors)),
            _ => None,
        })
    }

    /// `(|X1|, |X2|, |X3+|)` if the second phase ran.
    pub fn second_phase_classes(&self) -> Option<(usize, usize, usize)> {
        self.milestones.iter().find_map(|m| match *m {
            Milestone::SecondPhaseClasses {
                one_base_neighbor,
                two_base_neighbors,
                three_plus_base_neighbors,
                ..
            } => Some((one_base_neighbor, two_base_neighbors, three_plus_base_neighbors)),
            _ => None,
        })
    }

    pub fn matchings(&self) -> impl Iterator<Item = (&str, usize)> + '_ {
        self.milestones.iter().filter_map(|m| match m {
            Milestone::Matching { label, size } => Some((label.as_str(), *size)),
            _ => None,
        })
    }

    pub fn resolutions(&self) -> impl Iterator<Item = ResolutionCase> + '_ {
        self.milestones.iter().filter_map(|m| match *m {
            Milestone::Resolved { case, .. } => Some(case),
            _ => None,
        })
    }
}
