use std::io::{Read, Write};

use super::queries::{interval_queries, IntervalAccess};
use super::IntervalRealization;
use crate::codec;
use crate::error::{Error, Result};
use crate::primitives::{
    bit_width, prefixed, BitVector, Extremum, IntVector, RangeMaxIndex, SpaceComponent, SpaceUsage,
    DEFAULT_BLOCK,
};

pub const MAGIC: &[u8; 4] = b"SIGR";
const VERSION: u8 = 1;

/// Interval graph stored as the endpoint bit sequence `S`, the packed right
/// endpoints `r` in vertex order, and range-max / range-min indexes over `r`.
///
/// Space is `2n` bits for `S`, `n * ceil(log2(2n + 1))` for `r`, plus the
/// directories; the range-index block size `c` trades space for query time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccinctIntervalGraph {
    s: BitVector,
    r: IntVector,
    rmax: RangeMaxIndex,
    rmin: RangeMaxIndex,
}

impl SuccinctIntervalGraph {
    pub fn build(real: &IntervalRealization) -> Self {
        Self::with_block(real, DEFAULT_BLOCK)
    }

    pub fn with_block(real: &IntervalRealization, block: usize) -> Self {
        let s = BitVector::from_bits(real.endpoint_bits());
        let r = IntVector::with_width(&real.rights(), bit_width(2 * real.n() as u64));
        let rmax = RangeMaxIndex::with_block(&r, Extremum::Max, block);
        let rmin = RangeMaxIndex::with_block(&r, Extremum::Min, block);
        SuccinctIntervalGraph { s, r, rmax, rmin }
    }

    pub fn n(&self) -> usize {
        self.r.len()
    }

    /// The endpoint sequence `S`.
    pub fn endpoint_bits(&self) -> &BitVector {
        &self.s
    }

    pub fn rights(&self) -> &IntVector {
        &self.r
    }

    /// Leftmost vertex in `i..=j` with the largest right endpoint.
    pub fn range_max_right(&self, i: usize, j: usize) -> Result<usize> {
        self.rmax.query(&self.r, i, j)
    }

    /// Leftmost vertex in `i..=j` with the smallest right endpoint.
    pub fn range_min_right(&self, i: usize, j: usize) -> Result<usize> {
        self.rmin.query(&self.r, i, j)
    }

    pub(crate) fn rmin(&self, a: usize, b: usize) -> usize {
        self.rmin.query0(&self.r, a - 1, b - 1) + 1
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        codec::write_header(w, MAGIC, VERSION)?;
        codec::write_u64(w, self.n() as u64)?;
        self.s.write_to(w)?;
        self.r.write_to(w)?;
        self.rmax.write_to(w)?;
        self.rmin.write_to(w)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        codec::read_header(r, MAGIC, VERSION)?;
        let n = codec::read_usize(r)?;
        let s = BitVector::read_from(r)?;
        let rights = IntVector::read_from(r)?;
        let rmax = RangeMaxIndex::read_from(r)?;
        let rmin = RangeMaxIndex::read_from(r)?;
        if n == 0
            || s.len() != 2 * n
            || s.count_zeros() != n
            || rights.len() != n
            || rmax.len() != n
            || rmin.len() != n
            || rmax.kind() != Extremum::Max
            || rmin.kind() != Extremum::Min
        {
            return Err(Error::Format("interval graph components are inconsistent".into()));
        }
        let intervals = (1..=n)
            .map(|v| (s.select_unchecked(false, v - 1) + 1, rights.get(v - 1) as usize))
            .collect();
        IntervalRealization::new(intervals).map_err(|e| Error::Format(e.to_string()))?;
        Ok(SuccinctIntervalGraph { s, r: rights, rmax, rmin })
    }
}

impl IntervalAccess for SuccinctIntervalGraph {
    fn n(&self) -> usize {
        self.r.len()
    }

    fn endpoints(&self) -> &BitVector {
        &self.s
    }

    #[inline]
    fn right(&self, v: usize) -> usize {
        self.r.get(v - 1) as usize
    }

    #[inline]
    fn rmax(&self, a: usize, b: usize) -> usize {
        self.rmax.query0(&self.r, a - 1, b - 1) + 1
    }
}

interval_queries!(SuccinctIntervalGraph);

impl SpaceUsage for SuccinctIntervalGraph {
    fn space_breakdown(&self) -> Vec<SpaceComponent> {
        let mut parts = prefixed("S", &self.s);
        parts.extend(prefixed("r", &self.r));
        parts.extend(prefixed("rmax", &self.rmax));
        parts.extend(prefixed("rmin", &self.rmin));
        parts
    }
}
