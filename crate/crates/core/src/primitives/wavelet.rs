//! Sequences over a small integer alphabet, stored as a wavelet matrix.
//!
//! Level 0 holds the most significant bit of every symbol in original order;
//! each following level holds the next bit after a stable partition of the
//! previous level by its bit (zeros first). Access and rank walk the levels
//! top-down, select walks them back up, and two-sided range counting is the
//! usual `count_less` descent.

use std::io::{Read, Write};

use super::{BitVector, SpaceComponent, SpaceUsage};
use crate::codec;
use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"WMAT";
const VERSION: u8 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphabetSequence {
    len: usize,
    sigma: u64,
    levels: Vec<BitVector>,
    zeros: Vec<usize>,
}

fn width_for(sigma: u64) -> u32 {
    if sigma <= 2 {
        1
    } else {
        64 - (sigma - 1).leading_zeros()
    }
}

impl AlphabetSequence {
    /// Builds a sequence over `{0, .., sigma-1}`.
    pub fn new(symbols: &[u64], sigma: u64) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s >= sigma) {
            return Err(Error::BadSymbol { symbol: bad, sigma });
        }
        let width = width_for(sigma);
        let mut current = symbols.to_vec();
        let mut levels = Vec::with_capacity(width as usize);
        let mut zeros = Vec::with_capacity(width as usize);
        for level in 0..width {
            let shift = width - 1 - level;
            let bits = BitVector::from_bits(current.iter().map(|&s| (s >> shift) & 1 == 1));
            zeros.push(bits.count_zeros());
            levels.push(bits);
            let (mut lo, hi): (Vec<u64>, Vec<u64>) =
                current.iter().partition(|&&s| (s >> shift) & 1 == 0);
            lo.extend(hi);
            current = lo;
        }
        Ok(AlphabetSequence { len: symbols.len(), sigma, levels, zeros })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn sigma(&self) -> u64 {
        self.sigma
    }

    fn width(&self) -> u32 {
        self.levels.len() as u32
    }

    /// The bit vector of most significant symbol bits, in original order.
    pub fn top_level(&self) -> &BitVector {
        &self.levels[0]
    }

    #[inline]
    pub(crate) fn access_unchecked(&self, mut i: usize) -> u64 {
        let mut value = 0;
        for (level, bits) in self.levels.iter().enumerate() {
            let bit = bits.get0(i);
            value = (value << 1) | bit as u64;
            i = if bit {
                self.zeros[level] + bits.rank_unchecked(true, i)
            } else {
                bits.rank_unchecked(false, i)
            };
        }
        value
    }

    /// Symbol at 1-based position `i`.
    pub fn access(&self, i: usize) -> Result<u64> {
        if i == 0 || i > self.len {
            return Err(Error::OutOfRange { index: i, len: self.len });
        }
        Ok(self.access_unchecked(i - 1))
    }

    #[inline]
    pub(crate) fn rank_unchecked(&self, symbol: u64, i: usize) -> usize {
        let width = self.width();
        let (mut s, mut e) = (0, i);
        for (level, bits) in self.levels.iter().enumerate() {
            let bit = (symbol >> (width - 1 - level as u32)) & 1 == 1;
            if bit {
                s = self.zeros[level] + bits.rank_unchecked(true, s);
                e = self.zeros[level] + bits.rank_unchecked(true, e);
            } else {
                s = bits.rank_unchecked(false, s);
                e = bits.rank_unchecked(false, e);
            }
        }
        e - s
    }

    /// Occurrences of `symbol` among positions `1..=i`.
    pub fn rank(&self, symbol: u64, i: usize) -> Result<usize> {
        if symbol >= self.sigma {
            return Err(Error::BadSymbol { symbol, sigma: self.sigma });
        }
        if i > self.len {
            return Err(Error::PositionOutOfRange { index: i, len: self.len });
        }
        Ok(self.rank_unchecked(symbol, i))
    }

    /// 0-based position of the 0-based `k`-th occurrence; `k` must be valid.
    pub(crate) fn select_unchecked(&self, symbol: u64, k: usize) -> usize {
        let width = self.width();
        // Start of the symbol's run in the bottom ordering.
        let mut start = 0;
        for (level, bits) in self.levels.iter().enumerate() {
            let bit = (symbol >> (width - 1 - level as u32)) & 1 == 1;
            start = if bit {
                self.zeros[level] + bits.rank_unchecked(true, start)
            } else {
                bits.rank_unchecked(false, start)
            };
        }
        let mut idx = start + k;
        for (level, bits) in self.levels.iter().enumerate().rev() {
            let bit = (symbol >> (width - 1 - level as u32)) & 1 == 1;
            idx = if bit {
                bits.select_unchecked(true, idx - self.zeros[level])
            } else {
                bits.select_unchecked(false, idx)
            };
        }
        idx
    }

    /// 1-based position of the `j`-th occurrence of `symbol`.
    pub fn select(&self, symbol: u64, j: usize) -> Result<usize> {
        if symbol >= self.sigma {
            return Err(Error::BadSymbol { symbol, sigma: self.sigma });
        }
        let count = self.rank_unchecked(symbol, self.len);
        if j == 0 || j > count {
            return Err(Error::NotFound { symbol, rank: j, count });
        }
        Ok(self.select_unchecked(symbol, j - 1) + 1)
    }

    /// Number of entries with value `< bound` among 0-based positions `s..e`.
    pub(crate) fn count_less(&self, mut s: usize, mut e: usize, bound: u64) -> usize {
        let width = self.width();
        if width < 64 && bound >= 1u64 << width {
            return e - s;
        }
        let mut result = 0;
        for (level, bits) in self.levels.iter().enumerate() {
            let bit = (bound >> (width - 1 - level as u32)) & 1 == 1;
            let zs = bits.rank_unchecked(false, s);
            let ze = bits.rank_unchecked(false, e);
            if bit {
                result += ze - zs;
                s = self.zeros[level] + (s - zs);
                e = self.zeros[level] + (e - ze);
            } else {
                s = zs;
                e = ze;
            }
        }
        result
    }

    /// Entries at 1-based positions `x1..=x2` whose value lies in `lo..=hi`.
    /// Bounds are clamped to the sequence; empty ranges count zero.
    pub fn range_count(&self, x1: usize, x2: usize, lo: u64, hi: u64) -> usize {
        let x1 = x1.max(1);
        let x2 = x2.min(self.len);
        if x1 > x2 || lo > hi {
            return 0;
        }
        let (s, e) = (x1 - 1, x2);
        let upper = if hi == u64::MAX { e - s } else { self.count_less(s, e, hi + 1) };
        upper - self.count_less(s, e, lo)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.len).map(move |i| self.access_unchecked(i))
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        codec::write_header(w, MAGIC, VERSION)?;
        codec::write_u64(w, self.sigma)?;
        codec::write_u64(w, self.len as u64)?;
        codec::write_u8(w, self.levels.len() as u8)?;
        for level in &self.levels {
            level.write_to(w)?;
        }
        Ok(())
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        codec::read_header(r, MAGIC, VERSION)?;
        let sigma = codec::read_u64(r)?;
        let len = codec::read_usize(r)?;
        let nlevels = codec::read_u8(r)? as u32;
        if nlevels != width_for(sigma) {
            return Err(Error::Format(format!(
                "alphabet of size {sigma} needs {} levels, found {nlevels}",
                width_for(sigma)
            )));
        }
        let mut levels = Vec::with_capacity(nlevels as usize);
        let mut zeros = Vec::with_capacity(nlevels as usize);
        for _ in 0..nlevels {
            let bits = BitVector::read_from(r)?;
            if bits.len() != len {
                return Err(Error::Format("wavelet level length mismatch".into()));
            }
            zeros.push(bits.count_zeros());
            levels.push(bits);
        }
        let seq = AlphabetSequence { len, sigma, levels, zeros };
        if seq.iter().any(|s| s >= sigma) {
            return Err(Error::Format("symbol outside alphabet".into()));
        }
        Ok(seq)
    }
}

impl SpaceUsage for AlphabetSequence {
    fn space_breakdown(&self) -> Vec<SpaceComponent> {
        let mut bits = 0;
        let mut dir = 0;
        for level in &self.levels {
            let parts = level.space_breakdown();
            bits += parts[0].bits;
            dir += parts[1..].iter().map(|c| c.bits).sum::<u64>();
        }
        vec![
            SpaceComponent::new("levels", bits),
            SpaceComponent::new("directories", dir),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: [u64; 18] = [0, 2, 0, 2, 3, 1, 0, 3, 1, 0, 2, 1, 2, 4, 3, 5, 3, 1];

    #[test]
    fn depth_sequence_queries() {
        let seq = AlphabetSequence::new(&T, 6).unwrap();
        assert_eq!(seq.rank(2, 11).unwrap(), 3);
        assert_eq!(seq.select(4, 1).unwrap(), 14);
        assert_eq!(seq.access(16).unwrap(), 5);
        assert_eq!(seq.iter().collect::<Vec<_>>(), T);
        let total: usize = (0..6).map(|a| seq.rank(a, 18).unwrap()).sum();
        assert_eq!(total, 18);
    }

    #[test]
    fn errors() {
        let seq = AlphabetSequence::new(&T, 6).unwrap();
        assert!(matches!(seq.rank(6, 3), Err(Error::BadSymbol { .. })));
        assert!(matches!(seq.rank(1, 19), Err(Error::PositionOutOfRange { .. })));
        assert!(matches!(seq.select(4, 2), Err(Error::NotFound { .. })));
        assert!(matches!(seq.access(0), Err(Error::OutOfRange { .. })));
        assert!(AlphabetSequence::new(&[0, 7], 4).is_err());
    }

    #[test]
    fn range_count_clamps() {
        let seq = AlphabetSequence::new(&T, 6).unwrap();
        assert_eq!(seq.range_count(0, 100, 0, 5), 18);
        assert_eq!(seq.range_count(1, 6, 2, 3), 3);
        assert_eq!(seq.range_count(5, 4, 0, 5), 0);
        assert_eq!(seq.range_count(1, 18, 4, 3), 0);
    }

    #[test]
    fn binary_and_unary_alphabets() {
        let one = AlphabetSequence::new(&[0, 0, 0], 1).unwrap();
        assert_eq!(one.rank(0, 3).unwrap(), 3);
        assert_eq!(one.select(0, 2).unwrap(), 2);
        let empty = AlphabetSequence::new(&[], 4).unwrap();
        assert_eq!(empty.rank(3, 0).unwrap(), 0);
        assert_eq!(empty.range_count(1, 1, 0, 3), 0);
    }
}
