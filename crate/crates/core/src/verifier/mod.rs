//! Independent checks: properness of a finished weighting and auditors for
//! the intermediate conditions of the construction.

pub mod audit;
pub mod proper;

pub use audit::{audit, AuditReport, AuditStage, ConditionReport, Witness};
pub use proper::{verify_proper, weighted_degrees, Conflict, ConflictReport};
