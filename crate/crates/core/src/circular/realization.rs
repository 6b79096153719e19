use crate::error::{Error, Result};

/// Which arc's start becomes position 1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Anchor {
    /// The arc with the smallest start coordinate.
    #[default]
    MinStart,
    /// The given arc, 1-based in input order.
    Arc(usize),
}

/// Arcs with distinct endpoints `1..=2n`, read clockwise from `l` to `r` and
/// labelled `1..=n` by start position; arc 1 starts at position 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcRealization {
    arcs: Vec<(usize, usize)>,
}

impl ArcRealization {
    pub fn new(mut arcs: Vec<(usize, usize)>) -> Result<Self> {
        if arcs.is_empty() {
            return Err(Error::EmptyInput);
        }
        let m = 2 * arcs.len();
        let mut used = vec![false; m + 1];
        for &(l, r) in &arcs {
            for p in [l, r] {
                if p == 0 || p > m || std::mem::replace(&mut used[p], true) {
                    return Err(Error::InvalidRealization(format!(
                        "endpoint {p} is repeated or outside 1..={m}"
                    )));
                }
            }
        }
        arcs.sort_unstable();
        if arcs[0].0 != 1 {
            return Err(Error::InvalidRealization("no arc starts at position 1".into()));
        }
        Ok(ArcRealization { arcs })
    }

    /// Maps raw clockwise arcs onto positions `1..=2n`, cutting the circle at
    /// the anchor's start. Coordinates only matter through their order; an arc
    /// whose end is smaller than its start wraps past the largest coordinate.
    pub fn normalize(raw: &[(f64, f64)], anchor: Anchor) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = raw.len();
        let mut coords = Vec::with_capacity(2 * n);
        for (index, &(start, end)) in raw.iter().enumerate() {
            if !start.is_finite() || !end.is_finite() {
                return Err(Error::NonFinite { index });
            }
            if start == end {
                return Err(Error::FullCircle { index });
            }
            coords.push((start + 0.0, 2 * index));
            coords.push((end + 0.0, 2 * index + 1));
        }
        coords.sort_by(|a, b| a.0.total_cmp(&b.0));
        if let Some(w) = coords.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateEndpoint { coordinate: w[0].0 });
        }
        let anchor = match anchor {
            Anchor::MinStart => (0..n).min_by(|&a, &b| raw[a].0.total_cmp(&raw[b].0)).unwrap(),
            Anchor::Arc(i) if (1..=n).contains(&i) => i - 1,
            Anchor::Arc(i) => return Err(Error::BadAnchor { index: i, len: n }),
        };
        let mut rank = vec![0; 2 * n];
        for (pos, &(_, slot)) in coords.iter().enumerate() {
            rank[slot] = pos;
        }
        let m = 2 * n;
        let shift = rank[2 * anchor];
        let arcs = (0..n)
            .map(|i| {
                let at = |slot: usize| (rank[slot] + m - shift) % m + 1;
                (at(2 * i), at(2 * i + 1))
            })
            .collect();
        Self::new(arcs)
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc(&self, v: usize) -> Result<(usize, usize)> {
        if v == 0 || v > self.n() {
            return Err(Error::OutOfRange { index: v, len: self.n() });
        }
        Ok(self.arcs[v - 1])
    }

    /// Whether arc `v` (1-based) wraps past position `2n`.
    pub fn is_reversed(&self, v: usize) -> bool {
        let (l, r) = self.arcs[v - 1];
        l > r
    }

    pub fn reversed(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&v| self.is_reversed(v)).collect()
    }

    pub fn normal_count(&self) -> usize {
        self.arcs.iter().filter(|&&(l, r)| l < r).count()
    }

    pub fn to_raw(&self) -> Vec<(f64, f64)> {
        self.arcs.iter().map(|&(l, r)| (l as f64, r as f64)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::seven_arcs;

    #[test]
    fn seven_arcs_normalize() {
        let real = ArcRealization::normalize(&seven_arcs(), Anchor::MinStart).unwrap();
        let rights: Vec<usize> = real.arcs().iter().map(|a| a.1).collect();
        assert_eq!(rights, [3, 7, 8, 2, 14, 12, 10]);
        assert_eq!(real.reversed(), [4, 7]);
        assert_eq!(real.normal_count(), 5);
    }

    #[test]
    fn rotation_by_anchor() {
        let raw = [(0.5, 0.7), (0.6, 0.1)];
        let real = ArcRealization::normalize(&raw, Anchor::MinStart).unwrap();
        assert_eq!(real.arcs(), &[(1, 3), (2, 4)]);
        let real = ArcRealization::normalize(&raw, Anchor::Arc(2)).unwrap();
        assert_eq!(real.arcs(), &[(1, 3), (4, 2)]);
        assert_eq!(real.reversed(), [2]);
    }

    #[test]
    fn raw_wrap_need_not_stay_reversed() {
        // Two arcs wrap in raw coordinates but not after cutting at 3.0.
        let raw = [(3.0, 4.0), (5.0, 1.0), (6.0, 2.0)];
        let real = ArcRealization::normalize(&raw, Anchor::MinStart).unwrap();
        assert_eq!(real.arcs(), &[(1, 2), (3, 5), (4, 6)]);
        assert!(real.reversed().is_empty());
    }

    #[test]
    fn errors() {
        assert!(matches!(ArcRealization::normalize(&[], Anchor::MinStart), Err(Error::EmptyInput)));
        assert!(matches!(
            ArcRealization::normalize(&[(1.0, 1.0)], Anchor::MinStart),
            Err(Error::FullCircle { index: 0 })
        ));
        assert!(matches!(
            ArcRealization::normalize(&[(1.0, 2.0), (2.0, 3.0)], Anchor::MinStart),
            Err(Error::DuplicateEndpoint { .. })
        ));
        assert!(matches!(
            ArcRealization::normalize(&[(1.0, 2.0)], Anchor::Arc(2)),
            Err(Error::BadAnchor { index: 2, len: 1 })
        ));
        assert!(ArcRealization::new(vec![(2, 1)]).is_err());
        assert!(ArcRealization::new(vec![(1, 3), (3, 4)]).is_err());
    }
}
