//! Classical interval-graph algorithms run directly on the succinct
//! representation. Vertex order by left endpoint does most of the work: it is
//! already a DFS order, a BFS order and a perfect elimination ordering.

use serde::Serialize;

use crate::interval::queries::{report_above, IntervalAccess};
use crate::interval::SuccinctIntervalGraph;
use crate::primitives::{bit_width, IntVector};

/// DFS discovery order from vertex 1, restarting at the smallest unvisited
/// vertex when a component is exhausted.
pub fn dfs_order(g: &SuccinctIntervalGraph) -> Vec<usize> {
    (1..=g.n()).collect()
}

/// BFS discovery order with the same restart rule as [`dfs_order`].
pub fn bfs_order(g: &SuccinctIntervalGraph) -> Vec<usize> {
    (1..=g.n()).collect()
}

/// Perfect elimination ordering: the earlier neighbors of every vertex form
/// a clique.
pub fn peo(g: &SuccinctIntervalGraph) -> Vec<usize> {
    (1..=g.n()).collect()
}

/// Maximum independent set, by repeatedly taking the interval that ends
/// first among those starting after the last chosen one.
pub fn mis(g: &SuccinctIntervalGraph) -> Vec<usize> {
    let n = g.n();
    let s = g.endpoint_bits();
    let mut out = vec![g.rmin(1, n)];
    loop {
        let last = *out.last().unwrap();
        let next = s.rank_unchecked(false, g.right(last)) + 1;
        if next > n {
            return out;
        }
        out.push(g.rmin(next, n));
    }
}

/// Minimum vertex cover: the complement of [`mis`].
pub fn mvc(g: &SuccinctIntervalGraph) -> Vec<usize> {
    let mut in_mis = vec![false; g.n() + 1];
    for v in mis(g) {
        in_mis[v] = true;
    }
    (1..=g.n()).filter(|&v| !in_mis[v]).collect()
}

/// `d_i` = number of intervals with `l <= i < r`, for `i = 1..=2n`.
pub fn depth_sequence(g: &SuccinctIntervalGraph) -> Vec<usize> {
    let mut d = 0usize;
    g.endpoint_bits()
        .iter()
        .map(|bit| {
            if bit {
                d -= 1;
            } else {
                d += 1;
            }
            d
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueWitness {
    /// Leftmost position where the most intervals overlap.
    pub cut: usize,
    /// Vertices with `l <= cut < r`, ascending.
    pub members: Vec<usize>,
}

impl CliqueWitness {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

pub fn max_clique(g: &SuccinctIntervalGraph) -> CliqueWitness {
    let d = depth_sequence(g);
    let mut cut = 1;
    for (i, &di) in d.iter().enumerate() {
        if di > d[cut - 1] {
            cut = i + 1;
        }
    }
    let started = g.endpoint_bits().rank_unchecked(false, cut);
    let mut members = Vec::new();
    report_above(g, 1, started, cut, 0, &mut members);
    members.sort_unstable();
    CliqueWitness { cut, members }
}

/// Colors `1..=chi` packed at `ceil(log2(n + 1))` bits each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: IntVector,
}

impl Coloring {
    pub fn color(&self, v: usize) -> usize {
        self.colors.get(v - 1) as usize
    }

    pub fn colors(&self) -> Vec<usize> {
        self.colors.iter().map(|c| c as usize).collect()
    }

    pub fn num_colors(&self) -> usize {
        self.colors.iter().max().unwrap_or(0) as usize
    }

    pub fn storage_bits(&self) -> u64 {
        self.colors.len() as u64 * self.colors.width() as u64
    }
}

/// First-fit coloring in vertex order; optimal on interval graphs.
///
/// The earlier neighbors of `v` are exactly the `u < v` with `r_u > l_v`, so
/// each vertex costs time proportional to its earlier degree.
pub fn greedy_coloring(g: &SuccinctIntervalGraph) -> Coloring {
    let n = g.n();
    let mut colors = IntVector::new(n, bit_width(n as u64));
    let mut earlier = Vec::new();
    let mut used = Vec::new();
    for v in 1..=n {
        earlier.clear();
        report_above(g, 1, v - 1, g.left(v), 0, &mut earlier);
        used.clear();
        used.resize(earlier.len() + 2, false);
        for &u in &earlier {
            let c = colors.get(u - 1) as usize;
            if c < used.len() {
                used[c] = true;
            }
        }
        let c = (1..used.len()).find(|&c| !used[c]).unwrap();
        colors.set(v - 1, c as u64);
    }
    Coloring { colors }
}
