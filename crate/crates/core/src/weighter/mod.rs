//! Constructions of proper edge weightings.

pub mod cycle;
pub mod dispatch;
pub mod fallback;
pub mod lemma3;
pub mod log;
pub mod phase1;
pub mod phase2;
pub mod regular;
pub mod state;

use serde::{Deserialize, Serialize};

pub use cycle::weight_cycle;
pub use dispatch::weight_with_set;
pub use fallback::{arithmetic_fallback, local_search, FallbackRoute, LocalSearchBudget};
pub use lemma3::weight_bipartite_lemma3;
pub use log::{ConstructionLog, Milestone, ResolutionCase};
pub use phase1::phase1;
pub use phase2::phase2;
pub use regular::{construct, weight_regular, Built};
pub use state::{Level, VertexType, WeightState};

/// How each layer's independent set is found.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MisMode {
    /// Maximum independent set for every layer.
    #[default]
    Exact,
    /// Greedy maximal sets; a layer is recomputed exactly only when one of
    /// its matchings fails to saturate.
    Optimistic,
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub mis: MisMode,
    /// Check the per-step loop invariants while constructing (slow).
    pub check_steps: bool,
    /// Attach the full audit reports to the certificate.
    pub audit: bool,
    pub budget: LocalSearchBudget,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// Directly over `{-d1, 0, d2}`.
    Centered,
    /// `b - a < c - b`: built over `{-(b-a), 0, c-b}`, then shifted by `b`.
    Shifted,
    /// `b - a > c - b`: built over `{-(c-b), 0, b-a}`, negated, then shifted.
    NegatedShifted,
    ArithmeticExhaustive,
    ArithmeticLocalSearch,
    CycleDp,
    Edgeless,
}

impl Branch {
    pub fn is_arithmetic(self) -> bool {
        matches!(self, Branch::ArithmeticExhaustive | Branch::ArithmeticLocalSearch)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// Single nonempty layer above the base: the bipartite lemma.
    Bipartite,
    TwoPhase,
}
