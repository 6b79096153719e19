use crate::error::{Error, Result};

/// Closed intervals whose `2n` endpoints are exactly `1..=2n`, labeled
/// `1..=n` by increasing left endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRealization {
    intervals: Vec<(usize, usize)>,
}

impl IntervalRealization {
    /// Validates integer endpoints and relabels by left endpoint.
    pub fn new(mut intervals: Vec<(usize, usize)>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(Error::EmptyInput);
        }
        let m = 2 * intervals.len();
        let mut used = vec![false; m + 1];
        for (i, &(l, r)) in intervals.iter().enumerate() {
            if l >= r {
                return Err(Error::InvalidRealization(format!(
                    "interval {} = [{l}, {r}] needs left < right",
                    i + 1
                )));
            }
            for p in [l, r] {
                if p == 0 || p > m || std::mem::replace(&mut used[p], true) {
                    return Err(Error::InvalidRealization(format!(
                        "endpoint {p} is repeated or outside 1..={m}"
                    )));
                }
            }
        }
        intervals.sort_unstable();
        Ok(IntervalRealization { intervals })
    }

    /// Maps real-valued closed intervals onto an order-isomorphic realization.
    ///
    /// Endpoints are sorted by coordinate; at equal coordinates left endpoints
    /// precede right endpoints (touching closed intervals stay adjacent), and
    /// remaining ties go by input order.
    pub fn normalize(raw: &[(f64, f64)]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut events = Vec::with_capacity(2 * raw.len());
        for (index, &(left, right)) in raw.iter().enumerate() {
            if !left.is_finite() || !right.is_finite() {
                return Err(Error::NonFinite { index });
            }
            if left > right {
                return Err(Error::InvertedInterval { index, left, right });
            }
            // `+ 0.0` folds -0.0 into 0.0 so total_cmp treats them as equal.
            events.push((left + 0.0, 0u8, index));
            events.push((right + 0.0, 1u8, index));
        }
        events.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
        let mut intervals = vec![(0, 0); raw.len()];
        for (pos, &(_, kind, index)) in events.iter().enumerate() {
            if kind == 0 {
                intervals[index].0 = pos + 1;
            } else {
                intervals[index].1 = pos + 1;
            }
        }
        intervals.sort_unstable();
        Ok(IntervalRealization { intervals })
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    /// Interval of vertex `v` (1-based).
    pub fn interval(&self, v: usize) -> Result<(usize, usize)> {
        if v == 0 || v > self.n() {
            return Err(Error::OutOfRange { index: v, len: self.n() });
        }
        Ok(self.intervals[v - 1])
    }

    /// Bit `i` is `false` where position `i` is a left endpoint.
    pub fn endpoint_bits(&self) -> Vec<bool> {
        let mut bits = vec![true; 2 * self.n()];
        for &(l, _) in &self.intervals {
            bits[l - 1] = false;
        }
        bits
    }

    pub fn rights(&self) -> Vec<u64> {
        self.intervals.iter().map(|&(_, r)| r as u64).collect()
    }

    /// Interval `[l, r]` as raw coordinates, for oracles and text output.
    pub fn to_raw(&self) -> Vec<(f64, f64)> {
        self.intervals.iter().map(|&(l, r)| (l as f64, r as f64)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_input() {
        let real = IntervalRealization::normalize(&[(0.5, 2.0), (1.0, 3.0)]).unwrap();
        assert_eq!(real.intervals(), &[(1, 3), (2, 4)]);
    }

    #[test]
    fn point_interval() {
        let real = IntervalRealization::normalize(&[(1.0, 1.0)]).unwrap();
        assert_eq!(real.intervals(), &[(1, 2)]);
    }

    #[test]
    fn shared_coordinate_stays_intersecting() {
        let real = IntervalRealization::normalize(&[(0.0, 2.0), (2.0, 4.0)]).unwrap();
        let [(l1, r1), (l2, r2)] = [real.intervals()[0], real.intervals()[1]];
        assert!(l2 < r1 && l1 < r2);
        assert_eq!(real.intervals(), &[(1, 3), (2, 4)]);
    }

    #[test]
    fn relabels_by_left_endpoint() {
        let real = IntervalRealization::normalize(&[(5.0, 6.0), (1.0, 2.0)]).unwrap();
        assert_eq!(real.intervals(), &[(1, 2), (3, 4)]);
    }

    #[test]
    fn errors() {
        assert!(matches!(IntervalRealization::normalize(&[]), Err(Error::EmptyInput)));
        assert!(matches!(
            IntervalRealization::normalize(&[(2.0, 1.0)]),
            Err(Error::InvertedInterval { index: 0, .. })
        ));
        assert!(matches!(
            IntervalRealization::normalize(&[(f64::NAN, 1.0)]),
            Err(Error::NonFinite { .. })
        ));
        assert!(IntervalRealization::new(vec![(1, 3), (2, 3)]).is_err());
        assert!(IntervalRealization::new(vec![(1, 5)]).is_err());
        assert!(IntervalRealization::new(vec![(2, 1)]).is_err());
    }
}
