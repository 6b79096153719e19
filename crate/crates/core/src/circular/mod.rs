//! Circular-arc graphs.
//!
//! Arcs are cut open at the start of an anchor arc: positions run clockwise
//! `1..=2n` from there, and an arc whose end comes before its start in that
//! order wraps past the cut and is called reversed.

mod graph;
mod realization;

pub use graph::CircularArcGraph;
pub(crate) use graph::MAGIC;
pub use realization::{Anchor, ArcRealization};
