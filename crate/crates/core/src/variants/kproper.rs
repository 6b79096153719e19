use std::io::{Read, Write};

use crate::codec;
use crate::error::{Error, Result};
use crate::interval::queries::{interval_queries, IntervalAccess};
use crate::interval::{IntervalRealization, SuccinctIntervalGraph};
use crate::primitives::{
    prefixed, AlphabetSequence, BitVector, Extremum, FnValues, RangeMaxIndex, SpaceComponent,
    SpaceUsage, DEFAULT_BLOCK,
};

pub const MAGIC: &[u8; 4] = b"SKGR";
const VERSION: u8 = 1;

/// How an interval's depth is measured.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    /// Number of intervals containing it (k-proper).
    Proper,
    /// Number of intervals it contains (k-improper).
    Improper,
}

/// Interval graph whose right endpoints are implied by a depth-labelled
/// endpoint sequence `T`: position `i` carries `2d` if it is the left endpoint
/// of a depth-`d` interval and `2d + 1` if it is a right endpoint.
///
/// Intervals of equal depth never nest, so the `j`-th left endpoint labelled
/// `2d` is matched by the `j`-th right endpoint labelled `2d + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KProperGraph {
    s: BitVector,
    t: AlphabetSequence,
    rmax: RangeMaxIndex,
    k: usize,
    mode: Containment,
}

/// Counts, per vertex, the intervals containing it (`Proper`) or contained
/// in it (`Improper`), with a Fenwick tree over endpoint positions.
pub(crate) fn depths(real: &IntervalRealization, mode: Containment) -> Vec<usize> {
    let iv = real.intervals();
    let m = 2 * iv.len();
    let mut tree = vec![0usize; m + 1];
    let add = |tree: &mut Vec<usize>, mut i: usize| {
        while i <= m {
            tree[i] += 1;
            i += i & i.wrapping_neg();
        }
    };
    let prefix = |tree: &Vec<usize>, mut i: usize| {
        let mut sum = 0;
        while i > 0 {
            sum += tree[i];
            i -= i & i.wrapping_neg();
        }
        sum
    };
    let mut depth = vec![0; iv.len()];
    match mode {
        Containment::Proper => {
            for (v, &(_, r)) in iv.iter().enumerate() {
                depth[v] = v - prefix(&tree, r);
                add(&mut tree, r);
            }
        }
        Containment::Improper => {
            for (v, &(_, r)) in iv.iter().enumerate().rev() {
                depth[v] = prefix(&tree, r);
                add(&mut tree, r);
            }
        }
    }
    depth
}

impl KProperGraph {
    pub fn build(real: &IntervalRealization, mode: Containment) -> Self {
        Self::with_block(real, mode, DEFAULT_BLOCK)
    }

    pub fn with_block(real: &IntervalRealization, mode: Containment, block: usize) -> Self {
        let depth = depths(real, mode);
        let k = depth.iter().copied().max().unwrap_or(0);
        let mut symbols = vec![0u64; 2 * real.n()];
        for (&(l, r), &d) in real.intervals().iter().zip(&depth) {
            symbols[l - 1] = 2 * d as u64;
            symbols[r - 1] = 2 * d as u64 + 1;
        }
        let t = AlphabetSequence::new(&symbols, 2 * k as u64 + 2).expect("symbols fit");
        let s = BitVector::from_bits(real.endpoint_bits());
        let rmax = RangeMaxIndex::with_block(&real.rights(), Extremum::Max, block);
        KProperGraph { s, t, rmax, k, mode }
    }

    pub fn n(&self) -> usize {
        self.s.len() / 2
    }

    /// Largest depth over all intervals.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn mode(&self) -> Containment {
        self.mode
    }

    pub fn endpoint_bits(&self) -> &BitVector {
        &self.s
    }

    /// The depth-labelled endpoint sequence `T`.
    pub fn symbols(&self) -> &AlphabetSequence {
        &self.t
    }

    pub fn depth(&self, v: usize) -> Result<usize> {
        crate::interval::queries::check(self, v)?;
        Ok((self.t.access_unchecked(self.left(v) - 1) / 2) as usize)
    }

    /// Vertices grouped by depth `0..=k`, each group in increasing order.
    pub fn depth_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k + 1];
        for v in 1..=self.n() {
            let d = (self.t.access_unchecked(self.left(v) - 1) / 2) as usize;
            classes[d].push(v);
        }
        classes
    }

    pub fn to_interval_graph(&self) -> SuccinctIntervalGraph {
        SuccinctIntervalGraph::build(&self.realization())
    }

    fn decode_right(s: &BitVector, t: &AlphabetSequence, v: usize) -> usize {
        let l = s.select_unchecked(false, v - 1);
        let sym = t.access_unchecked(l);
        let j = t.rank_unchecked(sym, l + 1);
        t.select_unchecked(sym + 1, j - 1) + 1
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        codec::write_header(w, MAGIC, VERSION)?;
        codec::write_u64(w, self.n() as u64)?;
        codec::write_u8(w, matches!(self.mode, Containment::Improper) as u8)?;
        codec::write_u64(w, self.k as u64)?;
        self.s.write_to(w)?;
        self.t.write_to(w)?;
        self.rmax.write_to(w)
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        codec::read_header(r, MAGIC, VERSION)?;
        let n = codec::read_usize(r)?;
        let mode = match codec::read_u8(r)? {
            0 => Containment::Proper,
            1 => Containment::Improper,
            other => return Err(Error::Format(format!("unknown containment mode {other}"))),
        };
        let k = codec::read_usize(r)?;
        let s = BitVector::read_from(r)?;
        let t = AlphabetSequence::read_from(r)?;
        let rmax = RangeMaxIndex::read_from(r)?;
        let bad = |msg: &str| Error::Format(format!("k-proper graph: {msg}"));
        if n == 0 || s.len() != 2 * n || s.count_zeros() != n || t.len() != 2 * n {
            return Err(bad("component lengths disagree"));
        }
        if k >= n || t.sigma() != 2 * k as u64 + 2 {
            return Err(bad("alphabet does not match k"));
        }
        if rmax.len() != n || rmax.kind() != Extremum::Max {
            return Err(bad("range index does not match"));
        }
        if s.iter().zip(t.iter()).any(|(bit, sym)| bit != (sym % 2 == 1)) {
            return Err(bad("symbol parity disagrees with endpoint bits"));
        }
        // Every left symbol needs a matching right symbol after it.
        let mut open = vec![0usize; k + 1];
        for sym in t.iter() {
            let d = (sym / 2) as usize;
            if sym % 2 == 0 {
                open[d] += 1;
            } else {
                open[d] = open[d].checked_sub(1).ok_or_else(|| bad("unmatched right endpoint"))?;
            }
        }
        let g = KProperGraph { s, t, rmax, k, mode };
        let intervals = (1..=n).map(|v| (g.left(v), g.right(v))).collect();
        IntervalRealization::new(intervals).map_err(|e| bad(&e.to_string()))?;
        Ok(g)
    }
}

impl IntervalAccess for KProperGraph {
    fn n(&self) -> usize {
        self.s.len() / 2
    }

    fn endpoints(&self) -> &BitVector {
        &self.s
    }

    #[inline]
    fn right(&self, v: usize) -> usize {
        Self::decode_right(&self.s, &self.t, v)
    }

    fn rmax(&self, a: usize, b: usize) -> usize {
        let values = FnValues::new(self.n(), |i| Self::decode_right(&self.s, &self.t, i + 1) as u64);
        self.rmax.query0(&values, a - 1, b - 1) + 1
    }
}

interval_queries!(KProperGraph);

impl SpaceUsage for KProperGraph {
    fn space_breakdown(&self) -> Vec<SpaceComponent> {
        let mut parts = prefixed("S", &self.s);
        parts.extend(prefixed("T", &self.t));
        parts.extend(prefixed("rmax", &self.rmax));
        parts
    }
}
