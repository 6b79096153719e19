//! General interval graphs.

mod graph;
pub(crate) mod queries;
mod realization;

pub use graph::SuccinctIntervalGraph;
pub(crate) use graph::MAGIC;
pub use realization::IntervalRealization;
