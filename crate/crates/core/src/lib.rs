//! Space-efficient representations of interval graphs and their relatives.
//!
//! Every structure answers [`GraphQueries`] with 1-based vertex labels;
//! vertices are numbered by increasing left endpoint of their interval or arc.

pub mod algorithms;
pub mod circular;
mod codec;
pub mod error;
pub mod fixtures;
pub mod interval;
pub mod io;
pub mod oracle;
pub mod primitives;
pub mod random;
pub mod stats;
pub mod variants;
pub mod verify;


pub use circular::{Anchor, ArcRealization, CircularArcGraph};
pub use error::{Error, Result};
pub use interval::{IntervalRealization, SuccinctIntervalGraph};
pub use primitives::{SpaceComponent, SpaceUsage};
pub use variants::{Containment, KProperGraph, ProperIntervalGraph};

/// The query interface shared by all graph representations.
pub trait GraphQueries {
    fn vertex_count(&self) -> usize;

    /// Number of neighbors of `v`; `v` itself is never counted.
    fn degree(&self, v: usize) -> Result<usize>;

    /// Whether `u` and `v` are distinct and intersect.
    fn adjacent(&self, u: usize, v: usize) -> Result<bool>;

    /// Neighbors of `v` in increasing order.
    fn neighborhood(&self, v: usize) -> Result<Vec<usize>>;

    /// A shortest path from `u` to `v` inclusive, or `None` when they lie in
    /// different components.
    fn spath(&self, u: usize, v: usize) -> Result<Option<Vec<usize>>>;
}
