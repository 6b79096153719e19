//! Plain bit vector with a two-level rank directory and sampled select.
//!
//! Positions follow the 1-based convention used throughout the crate:
//! `rank(b, i)` counts occurrences of `b` among bits `1..=i` (so `i` ranges
//! over `0..=len`), and `select(b, j)` returns the 1-based position of the
//! `j`-th occurrence of `b`.
//!
//! Directory layout (default parameters):
//!
//! | component | granularity | width | bits per payload bit |
//! | --- | --- | --- | --- |
//! | superblock ranks | 2048 bits | 64 | 1/32 |
//! | block ranks (relative) | 512 bits | 16 | 1/32 |
//! | select samples (both bit values) | every 512th occurrence | 32 | 1/16 |
//!
//! for a total of `len / 8` directory bits.

use std::io::{Read, Write};

use super::{SpaceComponent, SpaceUsage};
use crate::codec;
use crate::error::{Error, Result};

const WORD_BITS: usize = 64;
const BLOCK_BITS: usize = 512;
const BLOCK_WORDS: usize = BLOCK_BITS / WORD_BITS;
const SUPER_BITS: usize = 2048;
const BLOCKS_PER_SUPER: usize = SUPER_BITS / BLOCK_BITS;
const SELECT_SAMPLE: usize = 512;

const MAGIC: &[u8; 4] = b"BVEC";
const VERSION: u8 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
    ones: usize,
    super_ranks: Vec<u64>,
    block_ranks: Vec<u16>,
    // Block index holding occurrence 1 + k * SELECT_SAMPLE, per bit value.
    select_samples: [Vec<u32>; 2],
}

/// Index of the `k`-th (0-based) set bit of `word`. `k` must be below the popcount.
#[inline]
pub(crate) fn select_in_word(mut word: u64, mut k: u32) -> u32 {
    let mut base = 0;
    loop {
        let c = (word & 0xff).count_ones();
        if k < c {
            break;
        }
        k -= c;
        word >>= 8;
        base += 8;
    }
    let mut byte = word & 0xff;
    for _ in 0..k {
        byte &= byte - 1;
    }
    base + byte.trailing_zeros()
}

impl BitVector {
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for bit in bits {
            if len % WORD_BITS == 0 {
                words.push(0);
            }
            if bit {
                words[len / WORD_BITS] |= 1 << (len % WORD_BITS);
            }
            len += 1;
        }
        Self::from_words(words, len)
    }

    /// Parses a string of `'0'`/`'1'` characters; any other character is skipped.
    pub fn from_str_bits(s: &str) -> Self {
        Self::from_bits(s.chars().filter_map(|c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        }))
    }

    /// Builds from raw little-endian words; bits at or beyond `len` are cleared.
    pub fn from_words(mut words: Vec<u64>, len: usize) -> Self {
        words.resize(len.div_ceil(WORD_BITS), 0);
        if len % WORD_BITS != 0 {
            let last = words.len() - 1;
            words[last] &= (1u64 << (len % WORD_BITS)) - 1;
        }
        let mut bv = BitVector {
            words,
            len,
            ones: 0,
            super_ranks: Vec::new(),
            block_ranks: Vec::new(),
            select_samples: [Vec::new(), Vec::new()],
        };
        bv.build_directory();
        bv
    }

    fn build_directory(&mut self) {
        let nblocks = self.words.len().div_ceil(BLOCK_WORDS) + 1;
        let mut super_ranks = Vec::with_capacity(nblocks / BLOCKS_PER_SUPER + 1);
        let mut block_ranks = Vec::with_capacity(nblocks);
        let mut samples = [Vec::new(), Vec::new()];
        let mut total = 0u64;
        let mut super_base = 0u64;
        for block in 0..nblocks {
            if block % BLOCKS_PER_SUPER == 0 {
                super_ranks.push(total);
                super_base = total;
            }
            block_ranks.push((total - super_base) as u16);
            let start = block * BLOCK_WORDS;
            let end = (start + BLOCK_WORDS).min(self.words.len());
            let block_start_bit = start * WORD_BITS;
            let block_bits = (end.saturating_sub(start) * WORD_BITS).min(self.len.saturating_sub(block_start_bit));
            let ones_here: u64 = self.words.get(start..end).map_or(0, |ws| {
                ws.iter().map(|w| w.count_ones() as u64).sum()
            });
            let zeros_here = block_bits as u64 - ones_here;
            let ones_before = total;
            let zeros_before = block_start_bit.min(self.len) as u64 - ones_before;
            // Record every sampled occurrence that falls inside this block.
            for (bit, before, here) in [(0usize, zeros_before, zeros_here), (1, ones_before, ones_here)] {
                while (samples[bit].len() as u64) * (SELECT_SAMPLE as u64) < before + here {
                    samples[bit].push(block as u32);
                }
            }
            total += ones_here;
        }
        self.ones = total as usize;
        self.super_ranks = super_ranks;
        self.block_ranks = block_ranks;
        self.select_samples = samples;
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn count_ones(&self) -> usize {
        self.ones
    }

    pub fn count_zeros(&self) -> usize {
        self.len - self.ones
    }

    pub fn count(&self, bit: bool) -> usize {
        if bit {
            self.ones
        } else {
            self.count_zeros()
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Bit at 1-based position `i`.
    pub fn get(&self, i: usize) -> Result<bool> {
        if i == 0 || i > self.len {
            return Err(Error::OutOfRange { index: i, len: self.len });
        }
        Ok(self.get0(i - 1))
    }

    #[inline]
    pub(crate) fn get0(&self, i: usize) -> bool {
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get0(i))
    }

    #[inline]
    fn block_rank1(&self, block: usize) -> usize {
        (self.super_ranks[block / BLOCKS_PER_SUPER] + self.block_ranks[block] as u64) as usize
    }

    #[inline]
    fn block_rank(&self, bit: bool, block: usize) -> usize {
        let ones = self.block_rank1(block);
        if bit {
            ones
        } else {
            (block * BLOCK_BITS).min(self.len) - ones
        }
    }

    /// Number of ones among the first `i` bits; `i` must be at most `len`.
    #[inline]
    pub(crate) fn rank1_unchecked(&self, i: usize) -> usize {
        let block = i / BLOCK_BITS;
        let mut r = self.block_rank1(block);
        let word = i / WORD_BITS;
        for w in &self.words[block * BLOCK_WORDS..word] {
            r += w.count_ones() as usize;
        }
        let rem = i % WORD_BITS;
        if rem != 0 {
            r += (self.words[word] & ((1u64 << rem) - 1)).count_ones() as usize;
        }
        r
    }

    #[inline]
    pub(crate) fn rank_unchecked(&self, bit: bool, i: usize) -> usize {
        let ones = self.rank1_unchecked(i);
        if bit {
            ones
        } else {
            i - ones
        }
    }

    /// Occurrences of `bit` among positions `1..=i`.
    pub fn rank(&self, bit: bool, i: usize) -> Result<usize> {
        if i > self.len {
            return Err(Error::PositionOutOfRange { index: i, len: self.len });
        }
        Ok(self.rank_unchecked(bit, i))
    }

    pub fn rank0(&self, i: usize) -> Result<usize> {
        self.rank(false, i)
    }

    pub fn rank1(&self, i: usize) -> Result<usize> {
        self.rank(true, i)
    }

    /// 0-based position of the 0-based `k`-th occurrence of `bit`.
    pub(crate) fn select_unchecked(&self, bit: bool, k: usize) -> usize {
        let samples = &self.select_samples[bit as usize];
        let s = k / SELECT_SAMPLE;
        let mut lo = samples[s] as usize;
        let mut hi = samples
            .get(s + 1)
            .map_or(self.block_ranks.len() - 1, |&b| b as usize);
        // Last block whose prefix count is <= k.
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if self.block_rank(bit, mid) <= k {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        let mut remaining = k - self.block_rank(bit, lo);
        let mut word = lo * BLOCK_WORDS;
        loop {
            let w = if bit { self.words[word] } else { !self.words[word] };
            let c = w.count_ones() as usize;
            if remaining < c {
                return word * WORD_BITS + select_in_word(w, remaining as u32) as usize;
            }
            remaining -= c;
            word += 1;
        }
    }

    /// 1-based position of the `j`-th occurrence of `bit`.
    pub fn select(&self, bit: bool, j: usize) -> Result<usize> {
        let count = self.count(bit);
        if j == 0 || j > count {
            return Err(Error::NotFound { symbol: bit as u64, rank: j, count });
        }
        Ok(self.select_unchecked(bit, j - 1) + 1)
    }

    pub fn select0(&self, j: usize) -> Result<usize> {
        self.select(false, j)
    }

    pub fn select1(&self, j: usize) -> Result<usize> {
        self.select(true, j)
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        codec::write_header(w, MAGIC, VERSION)?;
        codec::write_u64(w, self.len as u64)?;
        codec::write_words(w, &self.words)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        codec::read_header(r, MAGIC, VERSION)?;
        let len = codec::read_usize(r)?;
        let expected = len.div_ceil(WORD_BITS);
        let words = codec::read_words(r, expected)?;
        if words.len() != expected {
            return Err(Error::Format(format!(
                "bit vector of {len} bits needs {expected} words, found {}",
                words.len()
            )));
        }
        Ok(Self::from_words(words, len))
    }
}

impl SpaceUsage for BitVector {
    fn space_breakdown(&self) -> Vec<SpaceComponent> {
        vec![
            SpaceComponent::new("bits", self.words.len() as u64 * 64),
            SpaceComponent::new(
                "rank",
                self.super_ranks.len() as u64 * 64 + self.block_ranks.len() as u64 * 16,
            ),
            SpaceComponent::new(
                "select",
                (self.select_samples[0].len() + self.select_samples[1].len()) as u64 * 32,
            ),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_rank(bits: &[bool], b: bool, i: usize) -> usize {
        bits[..i].iter().filter(|&&x| x == b).count()
    }

    fn naive_select(bits: &[bool], b: bool, j: usize) -> Option<usize> {
        bits.iter()
            .enumerate()
            .filter(|(_, &x)| x == b)
            .nth(j - 1)
            .map(|(p, _)| p + 1)
    }

    #[test]
    fn nine_intervals_sequence() {
        let bv = BitVector::from_str_bits("000011011001001111");
        assert_eq!(bv.len(), 18);
        assert_eq!(bv.rank0(6).unwrap(), 4);
        assert_eq!(bv.select0(5).unwrap(), 7);
        assert_eq!(bv.rank1(0).unwrap(), 0);
        let bits: Vec<bool> = bv.iter().collect();
        assert_eq!(naive_rank(&bits, false, 6), 4);
        assert_eq!(naive_select(&bits, false, 5), Some(7));
    }

    #[test]
    fn tiny_cases() {
        assert_eq!(BitVector::from_str_bits("01").select1(1).unwrap(), 2);
        assert_eq!(BitVector::from_str_bits("10").select0(1).unwrap(), 2);
        let zeros = BitVector::from_bits(std::iter::repeat(false).take(8));
        assert_eq!(zeros.rank0(8).unwrap(), 8);
        assert!(zeros.select1(1).is_err());
    }

    #[test]
    fn errors() {
        let bv = BitVector::from_str_bits("0101");
        assert!(matches!(bv.rank0(5), Err(Error::PositionOutOfRange { .. })));
        assert!(matches!(bv.select1(3), Err(Error::NotFound { .. })));
        assert!(matches!(bv.select1(0), Err(Error::NotFound { .. })));
        assert!(bv.get(0).is_err());
        assert!(bv.get(5).is_err());
    }

    #[test]
    fn empty_vector() {
        let bv = BitVector::from_bits(std::iter::empty());
        assert_eq!(bv.rank1(0).unwrap(), 0);
        assert!(bv.select0(1).is_err());
    }

    #[test]
    fn block_boundaries() {
        // Dense runs crossing block and superblock edges.
        for len in [511, 512, 513, 2047, 2048, 2049, 5000] {
            let bits: Vec<bool> = (0..len).map(|i| (i * 7 + i / 3) % 5 < 2).collect();
            let bv = BitVector::from_bits(bits.iter().copied());
            for i in (0..=len).step_by(17).chain([len]) {
                assert_eq!(bv.rank1(i).unwrap(), naive_rank(&bits, true, i));
            }
            for b in [false, true] {
                for j in 1..=bv.count(b) {
                    assert_eq!(Some(bv.select(b, j).unwrap()), naive_select(&bits, b, j));
                }
            }
        }
    }

    #[test]
    fn directory_overhead_is_an_eighth() {
        let bv = BitVector::from_bits((0..1 << 20).map(|i| i % 3 == 0));
        let dir: u64 = bv.space_breakdown()[1..].iter().map(|c| c.bits).sum();
        assert!(dir as f64 <= (bv.len() as f64) / 4.0 + 256.0, "dir = {dir}");
    }

    #[test]
    fn select_in_word_matches_scan() {
        let w = 0b1011_0000_0000_0001_1000_0000_0000_0000_0000_0000_0000_0000_0000_0001_0000_0110u64;
        let positions: Vec<u32> = (0..64).filter(|&i| (w >> i) & 1 == 1).collect();
        for (k, &p) in positions.iter().enumerate() {
            assert_eq!(select_in_word(w, k as u32), p);
        }
    }
}
