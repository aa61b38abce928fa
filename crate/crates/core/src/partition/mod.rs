//! Independent-set layering, degeneracy colouring and saturating matchings.

pub mod degeneracy;
pub mod layers;
pub mod matching;
pub mod mis;

pub use degeneracy::{degeneracy_coloring, degeneracy_order};
pub use layers::{layered_partition, layered_partition_with, LayeredPartition, MisStrategy};
pub use matching::{saturating_matching, Matching, SaturationFailure};
pub use mis::{greedy_independent_set, maximum_independent_set, maximum_independent_set_within};
