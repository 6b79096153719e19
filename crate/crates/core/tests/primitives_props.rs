use proptest::prelude::*;
use sig_core::primitives::{
    AlphabetSequence, BitVector, Extremum, IntVector, PointGrid, RangeMaxIndex,
};

fn naive_rank<T: PartialEq>(xs: &[T], x: &T, i: usize) -> usize {
    xs[..i].iter().filter(|y| *y == x).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bitvector_rank_select(bits in prop::collection::vec(any::<bool>(), 0..3000)) {
        let bv = BitVector::from_bits(bits.iter().copied());
        prop_assert_eq!(bv.len(), bits.len());
        for i in (0..=bits.len()).step_by(7) {
            prop_assert_eq!(bv.rank1(i).unwrap(), naive_rank(&bits, &true, i));
            prop_assert_eq!(bv.rank0(i).unwrap() + bv.rank1(i).unwrap(), i);
        }
        for bit in [false, true] {
            let positions: Vec<usize> =
                bits.iter().enumerate().filter(|&(_, &b)| b == bit).map(|(i, _)| i + 1).collect();
            for (j, &p) in positions.iter().enumerate() {
                prop_assert_eq!(bv.select(bit, j + 1).unwrap(), p);
                prop_assert_eq!(bv.rank(bit, p).unwrap(), j + 1);
            }
            prop_assert!(bv.select(bit, positions.len() + 1).is_err());
        }
    }

    #[test]
    fn bitvector_serialization(bits in prop::collection::vec(any::<bool>(), 0..700)) {
        let bv = BitVector::from_bits(bits);
        let mut bytes = Vec::new();
        bv.write_to(&mut bytes).unwrap();
        let back = BitVector::read_from(&mut bytes.as_slice()).unwrap();
        prop_assert_eq!(back, bv);
    }

    #[test]
    fn intvector_round_trip(values in prop::collection::vec(0u64..1 << 40, 0..300)) {
        let iv = IntVector::from_values(&values);
        prop_assert_eq!(iv.iter().collect::<Vec<_>>(), values);
    }

    #[test]
    fn wavelet_matches_scan(
        (sigma, symbols) in (1u64..40).prop_flat_map(|s| (Just(s), prop::collection::vec(0..s, 0..400)))
    ) {
        let seq = AlphabetSequence::new(&symbols, sigma).unwrap();
        for (i, &c) in symbols.iter().enumerate() {
            prop_assert_eq!(seq.access(i + 1).unwrap(), c);
        }
        for c in 0..sigma {
            for i in (0..=symbols.len()).step_by(11) {
                prop_assert_eq!(seq.rank(c, i).unwrap(), naive_rank(&symbols, &c, i));
            }
            let positions: Vec<usize> =
                symbols.iter().enumerate().filter(|&(_, &s)| s == c).map(|(i, _)| i + 1).collect();
            for (j, &p) in positions.iter().enumerate() {
                prop_assert_eq!(seq.select(c, j + 1).unwrap(), p);
            }
        }
        let n = symbols.len();
        for (x1, x2, lo, hi) in [(1, n, 0, sigma - 1), (2, n / 2, 1, sigma / 2), (n / 3 + 1, n, sigma / 3, sigma - 1)] {
            let expected = if x1 > x2 || x2 == 0 {
                0
            } else {
                symbols[x1 - 1..x2].iter().filter(|&&s| lo <= s && s <= hi).count()
            };
            prop_assert_eq!(seq.range_count(x1, x2, lo, hi), expected);
        }
    }

    #[test]
    fn range_max_matches_scan(
        values in prop::collection::vec(0u64..50, 1..300),
        block in 1usize..40,
        ranges in prop::collection::vec((any::<prop::sample::Index>(), any::<prop::sample::Index>()), 30),
    ) {
        let max = RangeMaxIndex::with_block(&values, Extremum::Max, block);
        let min = RangeMaxIndex::with_block(&values, Extremum::Min, block);
        for (a, b) in ranges {
            let (a, b) = (a.index(values.len()), b.index(values.len()));
            let (i, j) = (a.min(b), a.max(b));
            let slice = &values[i..=j];
            let top = *slice.iter().max().unwrap();
            let bottom = *slice.iter().min().unwrap();
            let leftmost_max = i + slice.iter().position(|&v| v == top).unwrap() + 1;
            let leftmost_min = i + slice.iter().position(|&v| v == bottom).unwrap() + 1;
            prop_assert_eq!(max.query(&values, i + 1, j + 1).unwrap(), leftmost_max);
            prop_assert_eq!(min.query(&values, i + 1, j + 1).unwrap(), leftmost_min);
        }
    }

    #[test]
    fn grid_counts_match_brute_force(
        ys in (1usize..120).prop_flat_map(|m| Just((1..=m).collect::<Vec<_>>()).prop_shuffle()),
        rects in prop::collection::vec((0usize..130, 0usize..130, 0usize..130, 0usize..130), 20),
    ) {
        let grid = PointGrid::new(&ys).unwrap();
        for (x, &y) in ys.iter().enumerate() {
            prop_assert_eq!(grid.y(x + 1).unwrap(), y);
        }
        for (x1, x2, y1, y2) in rects {
            let expected = ys
                .iter()
                .enumerate()
                .filter(|&(x, &y)| x1 <= x + 1 && x + 1 <= x2 && y1 <= y && y <= y2)
                .count();
            prop_assert_eq!(grid.count(x1, x2, y1, y2), expected);
        }
    }
}
