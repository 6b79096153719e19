use std::io::{Read, Write};

use super::{SpaceComponent, SpaceUsage};
use crate::codec;
use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"IVEC";
const VERSION: u8 = 1;

/// Bits needed to write `v` in binary (at least 1).
pub fn bit_width(v: u64) -> u32 {
    (64 - v.leading_zeros()).max(1)
}

/// Fixed-width packed integer array, 0-indexed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntVector {
    words: Vec<u64>,
    len: usize,
    width: u32,
}

impl IntVector {
    pub fn new(len: usize, width: u32) -> Self {
        assert!((1..=64).contains(&width), "width {width} not in 1..=64");
        IntVector {
            words: vec![0; (len * width as usize).div_ceil(64)],
            len,
            width,
        }
    }

    /// Packs `values` using the narrowest width that holds the maximum.
    pub fn from_values(values: &[u64]) -> Self {
        let width = bit_width(values.iter().copied().max().unwrap_or(0));
        Self::with_width(values, width)
    }

    pub fn with_width(values: &[u64], width: u32) -> Self {
        let mut iv = Self::new(values.len(), width);
        for (i, &v) in values.iter().enumerate() {
            iv.set(i, v);
        }
        iv
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    #[inline]
    fn mask(&self) -> u64 {
        if self.width == 64 {
            u64::MAX
        } else {
            (1u64 << self.width) - 1
        }
    }

    pub fn set(&mut self, i: usize, v: u64) {
        assert!(i < self.len, "index {i} out of bounds for length {}", self.len);
        let mask = self.mask();
        assert!(v <= mask, "value {v} does not fit in {} bits", self.width);
        let bit = i * self.width as usize;
        let (w, off) = (bit / 64, bit % 64);
        self.words[w] = (self.words[w] & !(mask << off)) | (v << off);
        if off + self.width as usize > 64 {
            let spill = 64 - off;
            self.words[w + 1] = (self.words[w + 1] & !(mask >> spill)) | (v >> spill);
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> u64 {
        debug_assert!(i < self.len);
        let bit = i * self.width as usize;
        let (w, off) = (bit / 64, bit % 64);
        let mut v = self.words[w] >> off;
        if off + self.width as usize > 64 {
            v |= self.words[w + 1] << (64 - off);
        }
        v & self.mask()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        codec::write_header(w, MAGIC, VERSION)?;
        codec::write_u8(w, self.width as u8)?;
        codec::write_u64(w, self.len as u64)?;
        codec::write_words(w, &self.words)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        codec::read_header(r, MAGIC, VERSION)?;
        let width = codec::read_u8(r)? as u32;
        if !(1..=64).contains(&width) {
            return Err(Error::Format(format!("integer width {width} out of range")));
        }
        let len = codec::read_usize(r)?;
        let expected = len
            .checked_mul(width as usize)
            .ok_or_else(|| Error::Format("integer vector too long".into()))?
            .div_ceil(64);
        let words = codec::read_words(r, expected)?;
        if words.len() != expected {
            return Err(Error::Format("integer vector word count mismatch".into()));
        }
        Ok(IntVector { words, len, width })
    }
}

impl SpaceUsage for IntVector {
    fn space_breakdown(&self) -> Vec<SpaceComponent> {
        vec![SpaceComponent::new("packed", self.words.len() as u64 * 64)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packs_across_word_boundaries() {
        let values: Vec<u64> = (0..300).map(|i| (i * 2654435761u64) % 1000).collect();
        let iv = IntVector::with_width(&values, 10);
        assert_eq!(iv.iter().collect::<Vec<_>>(), values);
        let full = IntVector::with_width(&[u64::MAX, 1, u64::MAX], 64);
        assert_eq!(full.get(0), u64::MAX);
        assert_eq!(full.get(1), 1);
    }

    #[test]
    fn widths() {
        assert_eq!(bit_width(0), 1);
        assert_eq!(bit_width(1), 1);
        assert_eq!(bit_width(18), 5);
        assert_eq!(bit_width(200_000), 18);
        assert_eq!(IntVector::from_values(&[6, 5, 9, 8, 12, 18]).width(), 5);
    }
}
