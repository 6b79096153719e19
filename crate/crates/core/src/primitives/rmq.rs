//! Range maximum / minimum over a sequence stored elsewhere.
//!
//! The index keeps only positions, never values: queries receive a
//! [`ValueAccess`] handle to the sequence. Values are grouped into blocks of
//! `c` entries; a query scans its two partial blocks and resolves the run of
//! full blocks in between with a two-level sparse table:
//!
//! * inside a superblock of 32 blocks, `best(b, k)` for `k = 1..=4` is the
//!   4-bit offset from block `b` of the best block in `b..b + 2^k`;
//! * across superblocks, a classic sparse table stores global block indices.
//!
//! Each block also records the offset of its own best entry, so a full block
//! costs one value access and a query costs `O(c)` for its partial blocks.
//! Ties resolve to the leftmost position.

use std::io::{Read, Write};

use super::intvec::bit_width;
use super::{IntVector, SpaceComponent, SpaceUsage};
use crate::codec;
use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"RMXI";
const VERSION: u8 = 1;

pub const DEFAULT_BLOCK: usize = 32;
const BLOCKS_PER_SUPER: usize = 32;
const INNER_LEVELS: usize = 4;

/// Read access to a 0-indexed value sequence.
pub trait ValueAccess {
    fn len(&self) -> usize;
    fn value(&self, i: usize) -> u64;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl ValueAccess for [u64] {
    fn len(&self) -> usize {
        <[u64]>::len(self)
    }
    fn value(&self, i: usize) -> u64 {
        self[i]
    }
}

impl ValueAccess for Vec<u64> {
    fn len(&self) -> usize {
        Vec::len(self)
    }
    fn value(&self, i: usize) -> u64 {
        self[i]
    }
}

impl ValueAccess for IntVector {
    fn len(&self) -> usize {
        IntVector::len(self)
    }
    fn value(&self, i: usize) -> u64 {
        self.get(i)
    }
}

/// Adapts a closure over 0-based indices.
pub struct FnValues<F> {
    len: usize,
    f: F,
}

impl<F: Fn(usize) -> u64> FnValues<F> {
    pub fn new(len: usize, f: F) -> Self {
        FnValues { len, f }
    }
}

impl<F: Fn(usize) -> u64> ValueAccess for FnValues<F> {
    fn len(&self) -> usize {
        self.len
    }
    fn value(&self, i: usize) -> u64 {
        (self.f)(i)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extremum {
    Max,
    Min,
}

impl Extremum {
    #[inline]
    fn beats(self, a: u64, b: u64) -> bool {
        match self {
            Extremum::Max => a > b,
            Extremum::Min => a < b,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeMaxIndex {
    kind: Extremum,
    len: usize,
    block: usize,
    offsets: IntVector,
    inner: IntVector,
    outer: IntVector,
    outer_levels: usize,
}

#[derive(Clone, Copy)]
struct Best {
    pos: usize,
    val: u64,
}

impl RangeMaxIndex {
    pub fn build<V: ValueAccess + ?Sized>(values: &V, kind: Extremum) -> Self {
        Self::with_block(values, kind, DEFAULT_BLOCK)
    }

    pub fn with_block<V: ValueAccess + ?Sized>(values: &V, kind: Extremum, block: usize) -> Self {
        let block = block.max(1);
        let len = values.len();
        let nblocks = len.div_ceil(block);
        let mut index = RangeMaxIndex {
            kind,
            len,
            block,
            offsets: IntVector::new(0, 1),
            inner: IntVector::new(0, 1),
            outer: IntVector::new(0, 1),
            outer_levels: 0,
        };
        let block_best: Vec<Best> = (0..nblocks).map(|b| index.scan_block(values, b)).collect();
        let better = |a: usize, b: usize| -> usize {
            // Block indices; equal values resolve to the lower block.
            let (x, y) = (block_best[a], block_best[b]);
            if kind.beats(y.val, x.val) || (y.val == x.val && b < a) {
                b
            } else {
                a
            }
        };

        // Inner table: level k covers blocks b..b + 2^k within b's superblock.
        let mut inner = IntVector::new(nblocks * INNER_LEVELS, 4);
        let mut prev: Vec<usize> = (0..nblocks).collect();
        for k in 1..=INNER_LEVELS {
            let half = 1 << (k - 1);
            let mut cur = prev.clone();
            for b in 0..nblocks {
                let other = b + half;
                if other < nblocks && other / BLOCKS_PER_SUPER == b / BLOCKS_PER_SUPER {
                    cur[b] = better(prev[b], prev[other]);
                }
                inner.set(b * INNER_LEVELS + (k - 1), (cur[b] - b) as u64);
            }
            prev = cur;
        }

        // Outer table over superblocks, level 0 = best block of the superblock.
        let nsupers = nblocks.div_ceil(BLOCKS_PER_SUPER);
        let outer_levels = if nsupers == 0 { 0 } else { nsupers.ilog2() as usize + 1 };
        let width = bit_width(nblocks.saturating_sub(1) as u64);
        let mut outer = IntVector::new(nsupers * outer_levels, width);
        if nsupers > 0 {
            let mut level: Vec<usize> = (0..nsupers)
                .map(|s| {
                    let first = s * BLOCKS_PER_SUPER;
                    let last = (first + BLOCKS_PER_SUPER - 1).min(nblocks - 1);
                    (first..=last).fold(first, |acc, b| better(acc, b))
                })
                .collect();
            for k in 0..outer_levels {
                if k > 0 {
                    let half = 1 << (k - 1);
                    level = (0..nsupers)
                        .map(|s| if s + half < nsupers { better(level[s], level[s + half]) } else { level[s] })
                        .collect();
                }
                for (s, &b) in level.iter().enumerate() {
                    outer.set(s * outer_levels + k, b as u64);
                }
            }
        }
        let offsets: Vec<u64> = block_best.iter().enumerate().map(|(b, best)| (best.pos - b * block) as u64).collect();
        index.offsets = IntVector::with_width(&offsets, bit_width(block as u64 - 1));
        index.inner = inner;
        index.outer = outer;
        index.outer_levels = outer_levels;
        index
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn kind(&self) -> Extremum {
        self.kind
    }

    pub fn block_size(&self) -> usize {
        self.block
    }

    fn scan<V: ValueAccess + ?Sized>(&self, values: &V, from: usize, to: usize) -> Best {
        let mut best = Best { pos: from, val: values.value(from) };
        for pos in from + 1..=to {
            let val = values.value(pos);
            if self.kind.beats(val, best.val) {
                best = Best { pos, val };
            }
        }
        best
    }

    fn scan_block<V: ValueAccess + ?Sized>(&self, values: &V, b: usize) -> Best {
        let from = b * self.block;
        let to = (from + self.block - 1).min(self.len - 1);
        self.scan(values, from, to)
    }

    fn block_best<V: ValueAccess + ?Sized>(&self, values: &V, b: usize) -> Best {
        let pos = b * self.block + self.offsets.get(b) as usize;
        Best { pos, val: values.value(pos) }
    }

    #[inline]
    fn inner_best(&self, b: usize, k: usize) -> usize {
        b + self.inner.get(b * INNER_LEVELS + (k - 1)) as usize
    }

    /// Candidate blocks covering full blocks `a..=b` inside one superblock.
    fn inner_candidates(&self, a: usize, b: usize, out: &mut Vec<usize>) {
        let len = b - a + 1;
        if len == 1 {
            out.push(a);
            return;
        }
        let k = (len.ilog2() as usize).min(INNER_LEVELS);
        out.push(self.inner_best(a, k));
        out.push(self.inner_best(b + 1 - (1 << k), k));
    }

    fn block_candidates(&self, a: usize, b: usize, out: &mut Vec<usize>) {
        let (sa, sb) = (a / BLOCKS_PER_SUPER, b / BLOCKS_PER_SUPER);
        if sa == sb {
            self.inner_candidates(a, b, out);
            return;
        }
        self.inner_candidates(a, (sa + 1) * BLOCKS_PER_SUPER - 1, out);
        if sa + 1 < sb {
            let (s, t) = (sa + 1, sb - 1);
            let k = (t - s + 1).ilog2() as usize;
            out.push(self.outer.get(s * self.outer_levels + k) as usize);
            out.push(self.outer.get((t + 1 - (1 << k)) * self.outer_levels + k) as usize);
        }
        self.inner_candidates(sb * BLOCKS_PER_SUPER, b, out);
    }

    /// Leftmost extremal 0-based position in `i..=j`; requires `i <= j < len`.
    pub(crate) fn query0<V: ValueAccess + ?Sized>(&self, values: &V, i: usize, j: usize) -> usize {
        let (bi, bj) = (i / self.block, j / self.block);
        if bi == bj || bi + 1 == bj {
            return self.scan(values, i, j).pos;
        }
        let mut best = self.scan(values, i, (bi + 1) * self.block - 1);
        let mut blocks = Vec::with_capacity(6);
        self.block_candidates(bi + 1, bj - 1, &mut blocks);
        for b in blocks {
            let cand = self.block_best(values, b);
            if self.kind.beats(cand.val, best.val) || (cand.val == best.val && cand.pos < best.pos) {
                best = cand;
            }
        }
        let tail = self.scan(values, bj * self.block, j);
        if self.kind.beats(tail.val, best.val) {
            best = tail;
        }
        best.pos
    }

    /// Leftmost extremal 1-based position in `i..=j`.
    pub fn query<V: ValueAccess + ?Sized>(&self, values: &V, i: usize, j: usize) -> Result<usize> {
        if values.len() != self.len {
            return Err(Error::Format(format!(
                "index built for {} values, queried with {}",
                self.len,
                values.len()
            )));
        }
        if i == 0 || i > j || j > self.len {
            return Err(Error::EmptyRange { start: i, end: j });
        }
        Ok(self.query0(values, i - 1, j - 1) + 1)
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        codec::write_header(w, MAGIC, VERSION)?;
        codec::write_u8(w, matches!(self.kind, Extremum::Min) as u8)?;
        codec::write_u64(w, self.len as u64)?;
        codec::write_u64(w, self.block as u64)?;
        self.offsets.write_to(w)?;
        self.inner.write_to(w)?;
        self.outer.write_to(w)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        codec::read_header(r, MAGIC, VERSION)?;
        let kind = match codec::read_u8(r)? {
            0 => Extremum::Max,
            1 => Extremum::Min,
            k => return Err(Error::Format(format!("unknown extremum kind {k}"))),
        };
        let len = codec::read_usize(r)?;
        let block = codec::read_usize(r)?;
        if block == 0 {
            return Err(Error::Format("zero block size".into()));
        }
        let offsets = IntVector::read_from(r)?;
        let inner = IntVector::read_from(r)?;
        let outer = IntVector::read_from(r)?;
        let nblocks = len.div_ceil(block);
        let nsupers = nblocks.div_ceil(BLOCKS_PER_SUPER);
        let outer_levels = if nsupers == 0 { 0 } else { nsupers.ilog2() as usize + 1 };
        if offsets.len() != nblocks
            || inner.len() != nblocks * INNER_LEVELS
            || outer.len() != nsupers * outer_levels
        {
            return Err(Error::Format("range index table sizes do not match its length".into()));
        }
        if inner.iter().enumerate().any(|(e, off)| e / INNER_LEVELS + off as usize >= nblocks)
            || outer.iter().any(|b| b as usize >= nblocks)
            || offsets.iter().enumerate().any(|(b, off)| b * block + off as usize >= len.max(1) || off as usize >= block)
        {
            return Err(Error::Format("range index entry out of bounds".into()));
        }
        Ok(RangeMaxIndex { kind, len, block, offsets, inner, outer, outer_levels })
    }
}

impl SpaceUsage for RangeMaxIndex {
    fn space_breakdown(&self) -> Vec<SpaceComponent> {
        vec![
            SpaceComponent::new("offsets", self.offsets.space_bits()),
            SpaceComponent::new("inner", self.inner.space_bits()),
            SpaceComponent::new("outer", self.outer.space_bits()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const R: [u64; 9] = [6, 5, 9, 8, 12, 18, 15, 17, 16];

    fn naive(values: &[u64], kind: Extremum, i: usize, j: usize) -> usize {
        let mut best = i;
        for p in i..=j {
            if kind.beats(values[p - 1], values[best - 1]) {
                best = p;
            }
        }
        best
    }

    #[test]
    fn nine_intervals_right_endpoints() {
        let max = RangeMaxIndex::build(&R[..], Extremum::Max);
        let min = RangeMaxIndex::build(&R[..], Extremum::Min);
        assert_eq!(max.query(&R[..], 1, 5).unwrap(), 5);
        assert_eq!(max.query(&R[..], 3, 3).unwrap(), 3);
        assert_eq!(min.query(&R[..], 1, 9).unwrap(), 2);
    }

    #[test]
    fn range_errors() {
        let max = RangeMaxIndex::build(&R[..], Extremum::Max);
        assert!(matches!(max.query(&R[..], 4, 3), Err(Error::EmptyRange { .. })));
        assert!(matches!(max.query(&R[..], 0, 3), Err(Error::EmptyRange { .. })));
        assert!(matches!(max.query(&R[..], 1, 10), Err(Error::EmptyRange { .. })));
    }

    #[test]
    fn exhaustive_small_blocks_with_ties() {
        // Few distinct values force ties; tiny blocks exercise both table levels.
        let values: Vec<u64> = (0..200u64).map(|i| (i * 37 + i * i) % 7).collect();
        for block in [1, 2, 3, 8] {
            for kind in [Extremum::Max, Extremum::Min] {
                let idx = RangeMaxIndex::with_block(&values, kind, block);
                for i in 1..=values.len() {
                    for j in i..=values.len() {
                        assert_eq!(
                            idx.query(&values, i, j).unwrap(),
                            naive(&values, kind, i, j),
                            "block {block} {kind:?} [{i},{j}]"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn empty_sequence() {
        let empty: Vec<u64> = Vec::new();
        let idx = RangeMaxIndex::build(&empty, Extremum::Max);
        assert_eq!(idx.space_bits(), 0);
        assert!(idx.query(&empty, 1, 1).is_err());
    }
}
