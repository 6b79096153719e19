use std::io::{Read, Write};

use super::ArcRealization;
use crate::codec;
use crate::error::{Error, Result};
use crate::primitives::{
    bit_width, prefixed, AlphabetSequence, BitVector, Extremum, FnValues, IntVector, PointGrid,
    RangeMaxIndex, SpaceComponent, SpaceUsage, DEFAULT_BLOCK,
};
use crate::GraphQueries;

pub const MAGIC: &[u8; 4] = b"SCAG";
const VERSION: u8 = 1;

// Endpoint symbols of S′: the low bit marks a right endpoint, the high bit a
// reversed arc.
const NORMAL_LEFT: u64 = 0;
const NORMAL_RIGHT: u64 = 1;
const REVERSED_LEFT: u64 = 2;
const REVERSED_RIGHT: u64 = 3;

const SCAN_LIMIT: usize = 32;

/// Stored code of a symbol: the endpoint kind goes to the high bit so the
/// first wavelet level is exactly the left/right bit sequence `S`.
#[inline]
fn code(symbol: u64) -> u64 {
    ((symbol & 1) << 1) | (symbol >> 1)
}

/// Circular-arc graph over the endpoint sequence `S′` and two point grids:
/// `R1` pairs the `x`-th normal left endpoint with the rank of its right
/// endpoint among normal right endpoints, `R2` does the same for reversed
/// arcs. Ranks along `y` follow right-endpoint order, so range maxima over the
/// grid columns stand in for range maxima over `r′` and `r″`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularArcGraph {
    n: usize,
    q: usize,
    s: AlphabetSequence,
    normal: PointGrid,
    reversed: PointGrid,
    normal_max: RangeMaxIndex,
    reversed_max: RangeMaxIndex,
    degrees: Option<IntVector>,
}

impl CircularArcGraph {
    pub fn build(real: &ArcRealization) -> Self {
        Self::with_options(real, DEFAULT_BLOCK, false)
    }

    /// Also stores every degree explicitly, `ceil(log2(n))` bits each.
    pub fn with_degree_table(real: &ArcRealization) -> Self {
        Self::with_options(real, DEFAULT_BLOCK, true)
    }

    pub fn with_options(real: &ArcRealization, block: usize, degree_table: bool) -> Self {
        let n = real.n();
        let mut symbols = vec![0u64; 2 * n];
        for &(l, r) in real.arcs() {
            let rev = if l > r { 2 } else { 0 };
            symbols[l - 1] = rev;
            symbols[r - 1] = rev + 1;
        }
        let mut right_rank = vec![0usize; 2 * n + 1];
        let mut seen = [0usize; 2];
        for (i, &sym) in symbols.iter().enumerate() {
            if sym & 1 == 1 {
                seen[(sym >> 1) as usize] += 1;
                right_rank[i + 1] = seen[(sym >> 1) as usize];
            }
        }
        let (mut ys1, mut ys2) = (Vec::new(), Vec::new());
        for &(l, r) in real.arcs() {
            if l < r {
                ys1.push(right_rank[r]);
            } else {
                ys2.push(right_rank[r]);
            }
        }
        let coded: Vec<u64> = symbols.iter().map(|&a| code(a)).collect();
        let to_u64 = |ys: &[usize]| ys.iter().map(|&y| y as u64).collect::<Vec<_>>();
        let mut g = CircularArcGraph {
            n,
            q: ys1.len(),
            s: AlphabetSequence::new(&coded, 4).expect("symbols below 4"),
            normal_max: RangeMaxIndex::with_block(&to_u64(&ys1), Extremum::Max, block),
            reversed_max: RangeMaxIndex::with_block(&to_u64(&ys2), Extremum::Max, block),
            normal: PointGrid::new(&ys1).expect("ranks form a permutation"),
            reversed: PointGrid::new(&ys2).expect("ranks form a permutation"),
            degrees: None,
        };
        if degree_table {
            g.attach_degree_table();
        }
        g
    }

    fn attach_degree_table(&mut self) {
        let mut table = IntVector::new(self.n, bit_width(self.n as u64));
        for v in 1..=self.n {
            table.set(v - 1, self.count_neighbors(v) as u64);
        }
        self.degrees = Some(table);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of normal arcs.
    pub fn normal_count(&self) -> usize {
        self.q
    }

    pub fn reversed_count(&self) -> usize {
        self.n - self.q
    }

    pub fn has_degree_table(&self) -> bool {
        self.degrees.is_some()
    }

    /// `S′` with symbols 0/1 for normal left/right endpoints and 2/3 for
    /// reversed ones.
    pub fn symbols(&self) -> Vec<u64> {
        self.s.iter().map(|c| code(c)).collect()
    }

    /// The left/right endpoint sequence `S`.
    pub fn endpoint_bits(&self) -> &BitVector {
        self.s.top_level()
    }

    pub fn normal_grid(&self) -> &PointGrid {
        &self.normal
    }

    pub fn reversed_grid(&self) -> &PointGrid {
        &self.reversed
    }

    /// Right endpoints of the normal arcs in label order (`r′`).
    pub fn normal_rights(&self) -> Vec<usize> {
        (1..=self.q).map(|x| self.normal_right(x)).collect()
    }

    /// Right endpoints of the reversed arcs in label order (`r″`).
    pub fn reversed_rights(&self) -> Vec<usize> {
        (1..=self.n - self.q).map(|x| self.reversed_right(x)).collect()
    }

    pub fn arc(&self, v: usize) -> Result<(usize, usize)> {
        self.check(v)?;
        Ok((self.left(v), self.right(v)))
    }

    pub fn is_reversed(&self, v: usize) -> Result<bool> {
        self.check(v)?;
        Ok(self.reversed_at(v))
    }

    pub fn realization(&self) -> ArcRealization {
        let arcs = (1..=self.n).map(|v| (self.left(v), self.right(v))).collect();
        ArcRealization::new(arcs).expect("structure holds a valid realization")
    }

    /// The arc reaching farthest clockwise past `r_u` among arcs containing
    /// `r_u`, or `None` when no arc extends past it.
    pub fn succ(&self, u: usize) -> Result<Option<usize>> {
        self.check(u)?;
        Ok(self.succ_unchecked(u))
    }

    fn check(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::OutOfRange { index: v, len: self.n });
        }
        Ok(())
    }

    #[inline]
    fn rank(&self, symbol: u64, i: usize) -> usize {
        self.s.rank_unchecked(code(symbol), i)
    }

    #[inline]
    fn select(&self, symbol: u64, j: usize) -> usize {
        self.s.select_unchecked(code(symbol), j - 1) + 1
    }

    #[inline]
    fn left(&self, v: usize) -> usize {
        self.s.top_level().select_unchecked(false, v - 1) + 1
    }

    #[inline]
    fn reversed_at(&self, v: usize) -> bool {
        code(self.s.access_unchecked(self.left(v) - 1)) == REVERSED_LEFT
    }

    fn right(&self, v: usize) -> usize {
        let l = self.left(v);
        if self.reversed_at(v) {
            self.reversed_right(self.rank(REVERSED_LEFT, l))
        } else {
            self.normal_right(self.rank(NORMAL_LEFT, l))
        }
    }

    fn normal_right(&self, x: usize) -> usize {
        self.select(NORMAL_RIGHT, self.normal.y_unchecked(x))
    }

    fn reversed_right(&self, x: usize) -> usize {
        self.select(REVERSED_RIGHT, self.reversed.y_unchecked(x))
    }

    fn normal_vertex(&self, x: usize) -> usize {
        self.s.top_level().rank_unchecked(false, self.select(NORMAL_LEFT, x))
    }

    fn reversed_vertex(&self, x: usize) -> usize {
        self.s.top_level().rank_unchecked(false, self.select(REVERSED_LEFT, x))
    }

    fn normal_rmax(&self, a: usize, b: usize) -> usize {
        let ys = FnValues::new(self.q, |i| self.normal.y_unchecked(i + 1) as u64);
        self.normal_max.query0(&ys, a - 1, b - 1) + 1
    }

    fn reversed_rmax(&self, a: usize, b: usize) -> usize {
        let ys = FnValues::new(self.n - self.q, |i| self.reversed.y_unchecked(i + 1) as u64);
        self.reversed_max.query0(&ys, a - 1, b - 1) + 1
    }

    /// Columns `x` in `a..=b` of the grid with `y > threshold`.
    fn report_above(&self, reversed: bool, a: usize, b: usize, threshold: usize, out: &mut Vec<usize>) {
        let (grid, last) = if reversed { (&self.reversed, self.n - self.q) } else { (&self.normal, self.q) };
        let mut stack = vec![(a, b.min(last))];
        while let Some((a, b)) = stack.pop() {
            if a == 0 || a > b {
                continue;
            }
            if b - a < SCAN_LIMIT {
                out.extend((a..=b).filter(|&x| grid.y_unchecked(x) > threshold));
                continue;
            }
            let x = if reversed { self.reversed_rmax(a, b) } else { self.normal_rmax(a, b) };
            if grid.y_unchecked(x) > threshold {
                out.push(x);
                stack.push((a, x - 1));
                stack.push((x + 1, b));
            }
        }
    }

    /// Arcs that miss `v` are exactly those lying strictly inside the gap
    /// between consecutive endpoints of `v`: a normal `v` misses normal arcs
    /// left or right of it and reversed arcs that start after `r_v` and end
    /// before `l_v`; a reversed `v` misses only normal arcs inside
    /// `(r_v, l_v)` and meets every other reversed arc at the cut.
    fn count_neighbors(&self, v: usize) -> usize {
        let (l, r) = (self.left(v), self.right(v));
        let p = self.n - self.q;
        if self.reversed_at(v) {
            let missed = self.normal.count(
                self.rank(NORMAL_LEFT, r) + 1,
                self.q,
                1,
                self.rank(NORMAL_RIGHT, l),
            );
            self.q - missed + p - 1
        } else {
            let normal = self.rank(NORMAL_LEFT, r) - self.rank(NORMAL_RIGHT, l) - 1;
            let missed = self.reversed.count(
                self.rank(REVERSED_LEFT, r) + 1,
                p,
                1,
                self.rank(REVERSED_RIGHT, l),
            );
            normal + p - missed
        }
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        let (l, r) = (self.left(v), self.right(v));
        let p = self.n - self.q;
        let mut xs = Vec::new();
        let mut out = Vec::new();
        if self.reversed_at(v) {
            let before = self.rank(NORMAL_LEFT, r);
            out.extend((1..=before).map(|x| self.normal_vertex(x)));
            self.report_above(false, before + 1, self.q, self.rank(NORMAL_RIGHT, l), &mut xs);
            out.extend(xs.iter().map(|&x| self.normal_vertex(x)));
            out.extend((1..=p).map(|x| self.reversed_vertex(x)).filter(|&u| u != v));
        } else {
            self.report_above(false, 1, self.rank(NORMAL_LEFT, r), self.rank(NORMAL_RIGHT, l), &mut xs);
            out.extend(xs.iter().map(|&x| self.normal_vertex(x)).filter(|&u| u != v));
            let before = self.rank(REVERSED_LEFT, r);
            out.extend((1..=before).map(|x| self.reversed_vertex(x)));
            xs.clear();
            self.report_above(true, before + 1, p, self.rank(REVERSED_RIGHT, l), &mut xs);
            out.extend(xs.iter().map(|&x| self.reversed_vertex(x)));
        }
        out.sort_unstable();
        out
    }

    fn meets(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let (lu, ru) = (self.left(u), self.right(u));
        let (lv, rv) = (self.left(v), self.right(v));
        match (lu > ru, lv > rv) {
            (false, false) => !(ru < lv || rv < lu),
            (true, true) => true,
            (false, true) => ru >= lv || lu <= rv,
            (true, false) => rv >= lu || lv <= ru,
        }
    }

    fn succ_unchecked(&self, u: usize) -> Option<usize> {
        let p = self.right(u);
        let started_reversed = self.rank(REVERSED_LEFT, p);
        if started_reversed > 0 {
            // A reversed arc starting before p runs through the cut, past
            // every arc that ends before it.
            return Some(self.reversed_vertex(self.reversed_rmax(1, started_reversed)));
        }
        let mut best: Option<(usize, usize)> = None;
        let started_normal = self.rank(NORMAL_LEFT, p);
        if started_normal > 0 {
            let x = self.normal_rmax(1, started_normal);
            let r = self.normal_right(x);
            if r > p {
                best = Some((r, self.normal_vertex(x)));
            }
        }
        if self.n > self.q {
            let x = self.reversed_rmax(1, self.n - self.q);
            let r = self.reversed_right(x);
            if r > p && best.is_none_or(|(br, _)| r > br) {
                best = Some((r, self.reversed_vertex(x)));
            }
        }
        best.map(|(_, w)| w)
    }

    /// Greedy clockwise chain from `from` until it meets `to`.
    fn chain_step(&self, path: &mut Vec<usize>, to: usize) -> Step {
        let cur = *path.last().unwrap();
        if self.meets(cur, to) {
            path.push(to);
            return Step::Done;
        }
        match self.succ_unchecked(cur) {
            Some(next) if path.len() <= self.n => {
                path.push(next);
                Step::Continue
            }
            _ => Step::Stuck,
        }
    }

    fn shortest_path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        if u == v {
            return Some(vec![u]);
        }
        let mut forward = Some(vec![u]);
        let mut backward = Some(vec![v]);
        while forward.is_some() || backward.is_some() {
            if let Some(path) = forward.as_mut() {
                match self.chain_step(path, v) {
                    Step::Done => return forward,
                    Step::Stuck => forward = None,
                    Step::Continue => {}
                }
            }
            if let Some(path) = backward.as_mut() {
                match self.chain_step(path, u) {
                    Step::Done => {
                        let mut path = backward.unwrap();
                        path.reverse();
                        return Some(path);
                    }
                    Step::Stuck => backward = None,
                    Step::Continue => {}
                }
            }
        }
        None
    }

    pub fn write_to<W: Write>(&self, w: &mut W) -> Result<()> {
        codec::write_header(w, MAGIC, VERSION)?;
        codec::write_u64(w, self.n as u64)?;
        codec::write_u64(w, self.q as u64)?;
        self.s.write_to(w)?;
        self.normal.write_to(w)?;
        self.reversed.write_to(w)?;
        self.normal_max.write_to(w)?;
        self.reversed_max.write_to(w)?;
        match &self.degrees {
            Some(table) => {
                codec::write_u8(w, 1)?;
                table.write_to(w)
            }
            None => codec::write_u8(w, 0),
        }
    }

    pub fn read_from<R: Read>(r: &mut R) -> Result<Self> {
        codec::read_header(r, MAGIC, VERSION)?;
        let n = codec::read_usize(r)?;
        let q = codec::read_usize(r)?;
        let s = AlphabetSequence::read_from(r)?;
        let normal = PointGrid::read_from(r)?;
        let reversed = PointGrid::read_from(r)?;
        let normal_max = RangeMaxIndex::read_from(r)?;
        let reversed_max = RangeMaxIndex::read_from(r)?;
        let degrees = match codec::read_u8(r)? {
            0 => None,
            1 => Some(IntVector::read_from(r)?),
            other => return Err(Error::Format(format!("unknown degree-table flag {other}"))),
        };
        let bad = |msg: &str| Error::Format(format!("circular-arc graph: {msg}"));
        if n == 0 || q == 0 || q > n || s.len() != 2 * n || s.sigma() != 4 {
            return Err(bad("component lengths disagree"));
        }
        if normal.size() != q || reversed.size() != n - q {
            return Err(bad("grid sizes disagree with the arc counts"));
        }
        if normal_max.len() != q
            || reversed_max.len() != n - q
            || normal_max.kind() != Extremum::Max
            || reversed_max.kind() != Extremum::Max
        {
            return Err(bad("range indexes disagree with the grids"));
        }
        let mut counts = [0usize; 4];
        for c in s.iter() {
            counts[code(c) as usize] += 1;
        }
        if counts != [q, q, n - q, n - q] {
            return Err(bad("symbol counts disagree with the arc counts"));
        }
        if degrees.as_ref().is_some_and(|t| t.len() != n) {
            return Err(bad("degree table length"));
        }
        let g = CircularArcGraph { n, q, s, normal, reversed, normal_max, reversed_max, degrees };
        let arcs: Vec<(usize, usize)> = (1..=n).map(|v| (g.left(v), g.right(v))).collect();
        for (v, &(l, r)) in arcs.iter().enumerate() {
            if (l > r) != g.reversed_at(v + 1) {
                return Err(bad("arc orientation disagrees with its symbols"));
            }
        }
        ArcRealization::new(arcs).map_err(|e| bad(&e.to_string()))?;
        if let Some(table) = &g.degrees {
            if (1..=n).any(|v| table.get(v - 1) as usize != g.count_neighbors(v)) {
                return Err(bad("degree table does not match the arcs"));
            }
        }
        Ok(g)
    }
}

enum Step {
    Continue,
    Done,
    Stuck,
}

impl GraphQueries for CircularArcGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(match &self.degrees {
            Some(table) => table.get(v - 1) as usize,
            None => self.count_neighbors(v),
        })
    }

    fn adjacent(&self, u: usize, v: usize) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.meets(u, v))
    }

    fn neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check(v)?;
        Ok(self.neighbors(v))
    }

    fn spath(&self, u: usize, v: usize) -> Result<Option<Vec<usize>>> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.shortest_path(u, v))
    }
}

impl SpaceUsage for CircularArcGraph {
    fn space_breakdown(&self) -> Vec<SpaceComponent> {
        let mut parts = prefixed("S'", &self.s);
        parts.extend(prefixed("R1", &self.normal));
        parts.extend(prefixed("R2", &self.reversed));
        parts.extend(prefixed("rmax1", &self.normal_max));
        parts.extend(prefixed("rmax2", &self.reversed_max));
        if let Some(table) = &self.degrees {
            parts.extend(prefixed("degree", table));
        }
        parts
    }
}
