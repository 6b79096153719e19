//! Interval graphs with restricted nesting: proper graphs keep only `S`, and
//! k-proper / k-improper graphs replace the right endpoints by a sequence over
//! `2k + 2` symbols.

mod kproper;
mod proper;

pub use kproper::{Containment, KProperGraph};
pub(crate) use kproper::MAGIC as KPROPER_MAGIC;
pub use proper::ProperIntervalGraph;
pub(crate) use proper::MAGIC as PROPER_MAGIC;
