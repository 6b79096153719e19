use std::io::{Read, Write};

use crate::codec;
use crate::error::{Error, Result};
use crate::interval::queries::{interval_queries, IntervalAccess};
use crate::interval::{IntervalRealization, SuccinctIntervalGraph};
use crate::primitives::{prefixed, BitVector, SpaceComponent, SpaceUsage};

pub const MAGIC: &[u8; 4] = b"SPGR";
const VERSION: u8 = 1;

/// Proper interval graph: no interval nests inside another, so the `v`-th
/// right endpoint belongs to vertex `v` and `S` alone describes the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperIntervalGraph {
    s: BitVector,
}

impl ProperIntervalGraph {
    /// Fails with [`Error::NotProper`] naming the first vertex whose interval
    /// contains its successor's.
    pub fn build(real: &IntervalRealization) -> Result<Self> {
        let iv = real.intervals();
        for v in 1..iv.len() {
            if iv[v - 1].1 > iv[v].1 {
                return Err(Error::NotProper { outer: v, inner: v + 1 });
            }
        }
        Ok(ProperIntervalGraph { s: BitVector::from_bits(real.endpoint_bits()) })
    }

    pub fn n(&self) -> usize {
        self.s.len() / 2
    }

    pub fn endpoint_bits(&self) -> &BitVector {
        &self.s
    }

    /// Same graph in the general representation.
    pub fn to_interval_graph(&self) -> SuccinctIntervalGraph {
        SuccinctIntervalGraph::build(&self.realization())
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        codec::write_header(w, MAGIC, VERSION)?;
        codec::write_u64(w, self.n() as u64)?;
        self.s.write_to(w)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        codec::read_header(r, MAGIC, VERSION)?;
        let n = codec::read_usize(r)?;
        let s = BitVector::read_from(r)?;
        if n == 0 || s.len() != 2 * n || s.count_zeros() != n {
            return Err(Error::Format("proper graph sequence has the wrong shape".into()));
        }
        // The j-th right endpoint must follow the j-th left endpoint.
        let mut open = 0usize;
        for bit in s.iter() {
            if bit {
                open = open
                    .checked_sub(1)
                    .ok_or_else(|| Error::Format("right endpoint before its left".into()))?;
            } else {
                open += 1;
            }
        }
        Ok(ProperIntervalGraph { s })
    }
}

impl IntervalAccess for ProperIntervalGraph {
    fn n(&self) -> usize {
        self.s.len() / 2
    }

    fn endpoints(&self) -> &BitVector {
        &self.s
    }

    #[inline]
    fn right(&self, v: usize) -> usize {
        self.s.select_unchecked(true, v - 1) + 1
    }

    /// Right endpoints increase with the label.
    #[inline]
    fn rmax(&self, _a: usize, b: usize) -> usize {
        b
    }
}

interval_queries!(ProperIntervalGraph);

impl SpaceUsage for ProperIntervalGraph {
    fn space_breakdown(&self) -> Vec<SpaceComponent> {
        prefixed("S", &self.s)
    }
}
