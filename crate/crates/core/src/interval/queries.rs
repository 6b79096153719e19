//! Navigation shared by every representation that exposes the endpoint bit
//! sequence `S` (0 at left endpoints), decodable right endpoints, and range
//! maximum over the right endpoints in vertex order.

use crate::error::{Error, Result};
use crate::primitives::BitVector;

pub(crate) trait IntervalAccess {
    fn n(&self) -> usize;
    fn endpoints(&self) -> &BitVector;
    /// Right endpoint of a valid vertex.
    fn right(&self, v: usize) -> usize;
    /// Leftmost vertex in `a..=b` with the largest right endpoint; `1 <= a <= b <= n`.
    fn rmax(&self, a: usize, b: usize) -> usize;

    #[inline]
    fn left(&self, v: usize) -> usize {
        self.endpoints().select_unchecked(false, v - 1) + 1
    }
}

pub(crate) fn check<G: IntervalAccess + ?Sized>(g: &G, v: usize) -> Result<()> {
    if v == 0 || v > g.n() {
        return Err(Error::OutOfRange { index: v, len: g.n() });
    }
    Ok(())
}

/// Everyone except the intervals ending before `l_v` or starting after `r_v`;
/// the closed form counts `v` itself, hence the `- 1`.
pub(crate) fn degree<G: IntervalAccess + ?Sized>(g: &G, v: usize) -> usize {
    let s = g.endpoints();
    s.rank_unchecked(false, g.right(v)) - s.rank_unchecked(true, g.left(v)) - 1
}

pub(crate) fn adjacent<G: IntervalAccess + ?Sized>(g: &G, u: usize, v: usize) -> bool {
    if u == v {
        return false;
    }
    let (lu, ru) = (g.left(u), g.right(u));
    let (lv, rv) = (g.left(v), g.right(v));
    !(ru < lv || rv < lu)
}

const SCAN_LIMIT: usize = 32;

/// Reports every `u` in `a..=b` with `r_u > threshold`, skipping `exclude`.
pub(crate) fn report_above<G: IntervalAccess + ?Sized>(
    g: &G,
    a: usize,
    b: usize,
    threshold: usize,
    exclude: usize,
    out: &mut Vec<usize>,
) {
    let mut stack = vec![(a, b)];
    while let Some((a, b)) = stack.pop() {
        if a > b {
            continue;
        }
        // Short ranges cost no more to scan than one range-max query.
        if b - a < SCAN_LIMIT {
            out.extend((a..=b).filter(|&u| u != exclude && g.right(u) > threshold));
            continue;
        }
        let c = g.rmax(a, b);
        if g.right(c) > threshold {
            if c != exclude {
                out.push(c);
            }
            stack.push((a, c - 1));
            stack.push((c + 1, b));
        }
    }
}

pub(crate) fn neighborhood<G: IntervalAccess + ?Sized>(g: &G, v: usize) -> Vec<usize> {
    let k = g.endpoints().rank_unchecked(false, g.right(v));
    let mut out = Vec::new();
    report_above(g, 1, k, g.left(v), v, &mut out);
    out.sort_unstable();
    out
}

/// Among intervals starting before `r_u`, the one reaching farthest right,
/// provided it still meets `u`. For valid input this is never `None`: `u`
/// itself is a candidate.
pub(crate) fn succ<G: IntervalAccess + ?Sized>(g: &G, u: usize) -> Option<usize> {
    let k = g.endpoints().rank_unchecked(false, g.right(u));
    let i = g.rmax(1, k);
    (g.right(i) > g.left(u)).then_some(i)
}

pub(crate) fn spath<G: IntervalAccess + ?Sized>(g: &G, u: usize, v: usize) -> Option<Vec<usize>> {
    if u == v {
        return Some(vec![u]);
    }
    let (from, to) = if u < v { (u, v) } else { (v, u) };
    let mut path = vec![from];
    let mut cur = from;
    while !adjacent(g, cur, to) {
        let next = succ(g, cur)?;
        // A fixed point means nothing reaches past r_cur: different components.
        if g.right(next) <= g.right(cur) {
            return None;
        }
        path.push(next);
        cur = next;
    }
    path.push(to);
    if u > v {
        path.reverse();
    }
    Some(path)
}

/// Implements [`GraphQueries`](crate::GraphQueries) plus the interval-specific
/// inherent accessors for a type implementing `IntervalAccess`.
macro_rules! interval_queries {
    ($ty:ty) => {
        impl $ty {
            /// `[l_v, r_v]` for 1-based vertex `v`.
            pub fn interval(&self, v: usize) -> $crate::Result<(usize, usize)> {
                use $crate::interval::queries::IntervalAccess;
                $crate::interval::queries::check(self, v)?;
                Ok((self.left(v), self.right(v)))
            }

            /// The greedy shortest-path successor of `u`: the vertex starting
            /// before `r_u` whose interval reaches farthest right.
            pub fn succ(&self, u: usize) -> $crate::Result<Option<usize>> {
                $crate::interval::queries::check(self, u)?;
                Ok($crate::interval::queries::succ(self, u))
            }

            /// Decodes the realization stored in the structure.
            pub fn realization(&self) -> $crate::interval::IntervalRealization {
                use $crate::interval::queries::IntervalAccess;
                let intervals = (1..=self.n()).map(|v| (self.left(v), self.right(v))).collect();
                $crate::interval::IntervalRealization::new(intervals)
                    .expect("structure holds a valid realization")
            }
        }

        impl $crate::GraphQueries for $ty {
            fn vertex_count(&self) -> usize {
                $crate::interval::queries::IntervalAccess::n(self)
            }

            fn degree(&self, v: usize) -> $crate::Result<usize> {
                $crate::interval::queries::check(self, v)?;
                Ok($crate::interval::queries::degree(self, v))
            }

            fn adjacent(&self, u: usize, v: usize) -> $crate::Result<bool> {
                $crate::interval::queries::check(self, u)?;
                $crate::interval::queries::check(self, v)?;
                Ok($crate::interval::queries::adjacent(self, u, v))
            }

            fn neighborhood(&self, v: usize) -> $crate::Result<Vec<usize>> {
                $crate::interval::queries::check(self, v)?;
                Ok($crate::interval::queries::neighborhood(self, v))
            }

            fn spath(&self, u: usize, v: usize) -> $crate::Result<Option<Vec<usize>>> {
                $crate::interval::queries::check(self, u)?;
                $crate::interval::queries::check(self, v)?;
                Ok($crate::interval::queries::spath(self, u, v))
            }
        }
    };
}

pub(crate) use interval_queries;
