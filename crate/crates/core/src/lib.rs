//! Proper edge weightings of regular graphs over arbitrary three-element
//! weight sets, with exact rational arithmetic throughout.
//!
//! A weighting `w` of the edges is *proper* when every edge `uv` has
//! `d_w(u) != d_w(v)`, where `d_w(v)` sums the weights at `v`.

pub mod batch;
pub mod bitset;
pub mod certificate;
pub mod error;
pub mod formats;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod par;
pub mod partition;
pub mod rational;
pub mod verifier;
pub mod weighter;

pub use certificate::Certificate;
pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, Vertex};
pub use rational::{Rational, WeightSet};
pub use weighter::{weight_regular, weight_with_set, Branch, MisMode, Options};
