//! Random instance generators for tests, `verify` and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circular::ArcRealization;
use crate::interval::IntervalRealization;

/// The deterministic generator used everywhere a seed is accepted.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shuffles `1..=2n` and pairs consecutive entries.
pub fn intervals<R: Rng + ?Sized>(n: usize, rng: &mut R) -> IntervalRealization {
    let mut pos: Vec<usize> = (1..=2 * n).collect();
    pos.shuffle(rng);
    let iv = pos.chunks(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect();
    IntervalRealization::new(iv).expect("pairing of 1..=2n")
}

/// A random balanced endpoint sequence with the `j`-th right endpoint closing
/// the `j`-th left endpoint, so no interval nests in another.
pub fn proper_intervals<R: Rng + ?Sized>(n: usize, rng: &mut R) -> IntervalRealization {
    let mut lefts = Vec::with_capacity(n);
    let mut iv = Vec::with_capacity(n);
    for pos in 1..=2 * n {
        let open = lefts.len() - iv.len();
        let can_open = lefts.len() < n;
        if can_open && (open == 0 || rng.gen_bool(0.5)) {
            lefts.push(pos);
        } else {
            iv.push((lefts[iv.len()], pos));
        }
    }
    IntervalRealization::new(iv).expect("balanced sequence")
}

/// Shuffles `1..=2n` into clockwise `(start, end)` pairs and anchors at the
/// smallest start. For `n >= 2`, at least one arc is made to wrap.
pub fn arcs<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ArcRealization {
    let mut pos: Vec<f64> = (1..=2 * n).map(|p| p as f64).collect();
    pos.shuffle(rng);
    let raw: Vec<(f64, f64)> = pos.chunks(2).map(|p| (p[0], p[1])).collect();
    let real = ArcRealization::normalize(&raw, Default::default()).expect("distinct endpoints");
    if n < 2 || !real.reversed().is_empty() {
        return real;
    }
    let mut arcs = real.arcs().to_vec();
    let i = rng.gen_range(1..n);
    arcs[i] = (arcs[i].1, arcs[i].0);
    ArcRealization::new(arcs).expect("swapping keeps endpoints distinct")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_valid_and_deterministic() {
        for n in [1, 2, 5, 40] {
            let a = intervals(n, &mut seeded(7));
            assert_eq!(a, intervals(n, &mut seeded(7)));
            assert_eq!(a.n(), n);
            let p = proper_intervals(n, &mut seeded(7));
            assert!(p.intervals().windows(2).all(|w| w[0].1 < w[1].1));
            let c = arcs(n, &mut seeded(7));
            assert_eq!(c.n(), n);
            if n >= 2 {
                assert!(!c.reversed().is_empty());
            }
        }
    }
}
