use std::io::{Read, Write};

use super::{AlphabetSequence, SpaceComponent, SpaceUsage};
use crate::codec;
use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"PGRD";
const VERSION: u8 = 1;

/// A permutation point set on `[1, M] x [1, M]`: exactly one point per column.
///
/// The y-coordinates are kept in column order in a wavelet matrix, which gives
/// `y(x)` by access and rectangle counting by two `count_less` descents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointGrid {
    ys: AlphabetSequence,
}

impl PointGrid {
    /// `ys[x - 1]` is the y-coordinate of the point in column `x`.
    pub fn new(ys: &[usize]) -> Result<Self> {
        let m = ys.len();
        let mut seen = vec![false; m];
        for &y in ys {
            if y == 0 || y > m || std::mem::replace(&mut seen[y - 1], true) {
                return Err(Error::InvalidRealization(format!(
                    "grid y-coordinates must be a permutation of 1..={m}"
                )));
            }
        }
        let shifted: Vec<u64> = ys.iter().map(|&y| (y - 1) as u64).collect();
        Ok(PointGrid { ys: AlphabetSequence::new(&shifted, m.max(1) as u64)? })
    }

    pub fn size(&self) -> usize {
        self.ys.len()
    }

    #[inline]
    pub(crate) fn y_unchecked(&self, x: usize) -> usize {
        self.ys.access_unchecked(x - 1) as usize + 1
    }

    pub fn y(&self, x: usize) -> Result<usize> {
        if x == 0 || x > self.size() {
            return Err(Error::OutOfRange { index: x, len: self.size() });
        }
        Ok(self.y_unchecked(x))
    }

    /// Points inside `[x1, x2] x [y1, y2]`, with the rectangle clamped to the grid.
    pub fn count(&self, x1: usize, x2: usize, y1: usize, y2: usize) -> usize {
        let y1 = y1.max(1);
        if y2 < y1 {
            return 0;
        }
        self.ys.range_count(x1, x2, (y1 - 1) as u64, (y2 - 1) as u64)
    }

    pub fn points(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.ys.iter().enumerate().map(|(i, y)| (i + 1, y as usize + 1))
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        codec::write_header(w, MAGIC, VERSION)?;
        self.ys.write_to(w)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        codec::read_header(r, MAGIC, VERSION)?;
        let ys = AlphabetSequence::read_from(r)?;
        let grid = PointGrid { ys };
        let ys: Vec<usize> = grid.points().map(|(_, y)| y).collect();
        // Re-validate the permutation property.
        PointGrid::new(&ys).map_err(|e| Error::Format(e.to_string()))?;
        Ok(grid)
    }
}

impl SpaceUsage for PointGrid {
    fn space_breakdown(&self) -> Vec<SpaceComponent> {
        self.ys.space_breakdown()
    }
}
