//! Succinct building blocks: rank/select bit vectors, sequences over small
//! alphabets, range-extremum indexes and permutation point grids.

mod bitvec;
mod grid;
mod intvec;
mod rmq;
mod wavelet;

use serde::Serialize;

pub use bitvec::BitVector;
pub use grid::PointGrid;
pub use intvec::{bit_width, IntVector};
pub use rmq::{Extremum, FnValues, RangeMaxIndex, ValueAccess, DEFAULT_BLOCK};
pub use wavelet::AlphabetSequence;

/// One named contribution to a structure's size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceComponent {
    pub name: String,
    pub bits: u64,
}

impl SpaceComponent {
    pub fn new(name: impl Into<String>, bits: u64) -> Self {
        SpaceComponent { name: name.into(), bits }
    }
}

/// Size accounting. `space_bits` is always the sum of the breakdown.
pub trait SpaceUsage {
    fn space_breakdown(&self) -> Vec<SpaceComponent>;

    fn space_bits(&self) -> u64 {
        self.space_breakdown().iter().map(|c| c.bits).sum()
    }
}

/// Breakdown of `part` with every component name prefixed by `prefix.`.
pub(crate) fn prefixed(prefix: &str, part: &impl SpaceUsage) -> Vec<SpaceComponent> {
    part.space_breakdown()
        .into_iter()
        .map(|c| SpaceComponent::new(format!("{prefix}.{}", c.name), c.bits))
        .collect()
}
