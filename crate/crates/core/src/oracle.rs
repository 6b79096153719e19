//! Brute-force reference answers for testing: an adjacency matrix built by
//! direct pairwise intersection tests, plus textbook algorithms on it.

use std::collections::VecDeque;

use crate::circular::ArcRealization;
use crate::error::{Error, Result};
use crate::interval::IntervalRealization;

/// Largest `n` accepted by the exponential-time oracles.
pub const EXHAUSTIVE_LIMIT: usize = 20;
/// Largest `n` accepted by the polynomial interval oracles.
pub const POLY_LIMIT: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleGraph {
    n: usize,
    adj: Vec<bool>,
}

fn in_arc(start: f64, end: f64, x: f64) -> bool {
    if start <= end {
        start <= x && x <= end
    } else {
        x >= start || x <= end
    }
}

impl OracleGraph {
    /// Vertices `1..=n`; `meets(i, j)` is called with 0-based `i < j`.
    pub fn from_fn(n: usize, mut meets: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![false; n * n];
        for i in 0..n {
            for j in i + 1..n {
                if meets(i, j) {
                    adj[i * n + j] = true;
                    adj[j * n + i] = true;
                }
            }
        }
        OracleGraph { n, adj }
    }

    /// Closed real intervals, vertex `i + 1` for `raw[i]`.
    pub fn from_raw_intervals(raw: &[(f64, f64)]) -> Self {
        Self::from_fn(raw.len(), |i, j| raw[i].0.max(raw[j].0) <= raw[i].1.min(raw[j].1))
    }

    pub fn from_intervals(real: &IntervalRealization) -> Self {
        Self::from_raw_intervals(&real.to_raw())
    }

    /// Closed clockwise arcs `(start, end)`; an arc with `end < start` wraps.
    /// Two arcs meet exactly when one contains the other's start.
    pub fn from_raw_arcs(raw: &[(f64, f64)]) -> Self {
        Self::from_fn(raw.len(), |i, j| {
            let (a, b) = (raw[i], raw[j]);
            in_arc(a.0, a.1, b.0) || in_arc(b.0, b.1, a.0)
        })
    }

    pub fn from_arcs(real: &ArcRealization) -> Self {
        Self::from_raw_arcs(&real.to_raw())
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = OracleGraph { n, adj: vec![false; n * n] };
        for &(u, v) in edges {
            if u != v {
                g.adj[(u - 1) * n + v - 1] = true;
                g.adj[(v - 1) * n + u - 1] = true;
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[(u - 1) * self.n + v - 1]
    }

    pub fn neighborhood(&self, v: usize) -> Vec<usize> {
        (1..=self.n).filter(|&u| self.adjacent(v, u)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        (1..=self.n).filter(|&u| self.adjacent(v, u)).count()
    }

    /// Hop distances from `u`; `None` for unreachable vertices. Index 0 unused.
    pub fn distances_from(&self, u: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n + 1];
        dist[u] = Some(0);
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for y in 1..=self.n {
                if self.adjacent(x, y) && dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn bfs_dist(&self, u: usize, v: usize) -> Option<usize> {
        self.distances_from(u)[v]
    }

    /// Whether consecutive vertices are adjacent.
    pub fn is_path(&self, path: &[usize]) -> bool {
        !path.is_empty()
            && path.iter().all(|&v| (1..=self.n).contains(&v))
            && path.windows(2).all(|w| self.adjacent(w[0], w[1]))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.adjacent(u, v)))
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| self.adjacent(u, v)))
    }

    pub fn is_vertex_cover(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.n + 1];
        for &v in set {
            inside[v] = true;
        }
        (1..=self.n).all(|u| (u + 1..=self.n).all(|v| !self.adjacent(u, v) || inside[u] || inside[v]))
    }

    /// `colors[v - 1]` is the color of `v`; colors must be positive.
    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.n
            && colors.iter().all(|&c| c > 0)
            && (1..=self.n).all(|u| (u + 1..=self.n).all(|v| !self.adjacent(u, v) || colors[u - 1] != colors[v - 1]))
    }

    fn check_permutation(&self, order: &[usize]) -> bool {
        let mut seen = vec![false; self.n + 1];
        order.len() == self.n
            && order.iter().all(|&v| (1..=self.n).contains(&v) && !std::mem::replace(&mut seen[v], true))
    }

    /// Every vertex's neighbors placed before it in `order` form a clique.
    pub fn is_peo(&self, order: &[usize]) -> bool {
        if !self.check_permutation(order) {
            return false;
        }
        (0..order.len()).all(|i| {
            let earlier: Vec<usize> = order[..i].iter().copied().filter(|&u| self.adjacent(u, order[i])).collect();
            self.is_clique(&earlier)
        })
    }

    /// Replays `order` against a DFS stack: each new vertex must be adjacent
    /// to the deepest stack vertex that still has undiscovered neighbors, and
    /// a new tree may start only once the stack has emptied.
    pub fn valid_dfs(&self, order: &[usize]) -> bool {
        if !self.check_permutation(order) {
            return false;
        }
        let mut visited = vec![false; self.n + 1];
        let mut stack: Vec<usize> = Vec::new();
        for &w in order {
            while let Some(&top) = stack.last() {
                if self.adjacent(top, w) {
                    break;
                }
                if (1..=self.n).any(|x| !visited[x] && self.adjacent(top, x)) {
                    return false;
                }
                stack.pop();
            }
            visited[w] = true;
            stack.push(w);
        }
        true
    }

    /// Replays `order` against a BFS queue: each new vertex must be adjacent
    /// to the earliest discovered vertex that still has undiscovered
    /// neighbors, or start a new tree when there is none.
    pub fn valid_bfs(&self, order: &[usize]) -> bool {
        if !self.check_permutation(order) {
            return false;
        }
        let mut visited = vec![false; self.n + 1];
        let mut head = 0;
        for (i, &w) in order.iter().enumerate() {
            while head < i && !(1..=self.n).any(|x| !visited[x] && self.adjacent(order[head], x)) {
                head += 1;
            }
            if head < i && !self.adjacent(order[head], w) {
                return false;
            }
            visited[w] = true;
        }
        true
    }

    fn exhaustive_limit(&self, what: &'static str) -> Result<()> {
        if self.n > EXHAUSTIVE_LIMIT {
            return Err(Error::OracleLimit { what, limit: EXHAUSTIVE_LIMIT, n: self.n });
        }
        Ok(())
    }

    /// Largest independent set by trying every subset.
    pub fn mis_size_exhaustive(&self) -> Result<usize> {
        self.exhaustive_limit("exhaustive independent set")?;
        let masks = self.neighbor_masks();
        Ok((0u32..1 << self.n)
            .filter(|&set| (0..self.n).all(|v| set >> v & 1 == 0 || masks[v] & set == 0))
            .map(|set| set.count_ones() as usize)
            .max()
            .unwrap_or(0))
    }

    /// Largest clique by trying every subset.
    pub fn clique_size_exhaustive(&self) -> Result<usize> {
        self.exhaustive_limit("exhaustive clique")?;
        let masks = self.neighbor_masks();
        Ok((0u32..1 << self.n)
            .filter(|&set| (0..self.n).all(|v| set >> v & 1 == 0 || (set & !(1 << v)) & !masks[v] == 0))
            .map(|set| set.count_ones() as usize)
            .max()
            .unwrap_or(0))
    }

    fn neighbor_masks(&self) -> Vec<u32> {
        (0..self.n)
            .map(|u| (0..self.n).filter(|&v| self.adj[u * self.n + v]).fold(0, |m, v| m | 1 << v))
            .collect()
    }
}

fn poly_limit(what: &'static str, n: usize) -> Result<()> {
    if n > POLY_LIMIT {
        return Err(Error::OracleLimit { what, limit: POLY_LIMIT, n });
    }
    Ok(())
}

/// Maximum independent set size by the interval-scheduling recurrence:
/// with intervals sorted by right endpoint, `best[i] = max(best[i - 1],
/// 1 + best[last interval ending before l_i])`.
pub fn interval_mis_size(real: &IntervalRealization) -> Result<usize> {
    poly_limit("interval independent set", real.n())?;
    let mut iv = real.intervals().to_vec();
    iv.sort_by_key(|&(_, r)| r);
    let mut best = vec![0usize; iv.len() + 1];
    for i in 1..=iv.len() {
        let l = iv[i - 1].0;
        let p = iv[..i - 1].iter().rposition(|&(_, r)| r < l).map_or(0, |j| j + 1);
        best[i] = best[i - 1].max(1 + best[p]);
    }
    Ok(best[iv.len()])
}

/// Most intervals sharing a point, over every endpoint position.
pub fn interval_clique_size(real: &IntervalRealization) -> Result<usize> {
    poly_limit("interval clique", real.n())?;
    let m = 2 * real.n();
    Ok((1..=m)
        .map(|k| real.intervals().iter().filter(|&&(l, r)| l <= k && k <= r).count())
        .max()
        .unwrap_or(0))
}
