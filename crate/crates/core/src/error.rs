use thiserror::Error;

use crate::partition::matching::SaturationFailure;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph is {k}-regular but degree at least {min} is required")]
    DegreeTooSmall { k: usize, min: usize },

    #[error("graph has a K2 component ({0}, {1}); no proper weighting exists")]
    NotNice(usize, usize),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("retry budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("invalid weight set: {0}")]
    InvalidWeightSet(String),

    #[error("weight {value} on edge {edge} is not in the weight set")]
    WeightOutsideSet { edge: usize, value: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error(transparent)]
    Saturation(#[from] SaturationFailure),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("oracle cap exceeded: {m} edges > cap {cap}")]
    OracleCap { m: usize, cap: usize },

    #[error("existence guaranteed by the 1-2-3 theorem; constructive search failed at this size ({0})")]
    FallbackExhausted(String),

    #[error("malformed certificate: {0}")]
    Certificate(String),
}
