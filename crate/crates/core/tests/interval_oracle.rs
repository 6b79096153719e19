use proptest::prelude::*;
use sig_core::io::{build_graph, AnyGraph, GraphType, Instance};
use sig_core::oracle::OracleGraph;
use sig_core::variants::Containment;
use sig_core::{
    random, verify, GraphQueries, IntervalRealization, KProperGraph, ProperIntervalGraph,
    SuccinctIntervalGraph,
};

fn assert_matches_oracle(g: &dyn GraphQueries, o: &OracleGraph) {
    let n = o.n();
    assert_eq!(g.vertex_count(), n);
    for u in 1..=n {
        let nb = g.neighborhood(u).unwrap();
        assert_eq!(nb, o.neighborhood(u), "neighborhood({u})");
        assert_eq!(g.degree(u).unwrap(), nb.len(), "degree({u})");
        let dist = o.distances_from(u);
        for v in 1..=n {
            assert_eq!(g.adjacent(u, v).unwrap(), o.adjacent(u, v), "adjacent({u}, {v})");
            let path = g.spath(u, v).unwrap();
            assert_eq!(path.as_ref().map(|p| p.len() - 1), dist[v], "spath({u}, {v})");
            if let Some(p) = path {
                assert!(o.is_path(&p) && p[0] == u && *p.last().unwrap() == v);
            }
        }
    }
}

#[test]
fn general_structure_matches_oracle() {
    let mut rng = random::seeded(21);
    for n in 1..=12 {
        for _ in 0..40 {
            let real = random::intervals(n, &mut rng);
            assert_matches_oracle(&SuccinctIntervalGraph::build(&real), &OracleGraph::from_intervals(&real));
        }
    }
}

#[test]
fn small_blocks_match_oracle() {
    let mut rng = random::seeded(22);
    for block in [1, 2, 3, 5] {
        let real = random::intervals(60, &mut rng);
        assert_matches_oracle(&SuccinctIntervalGraph::with_block(&real, block), &OracleGraph::from_intervals(&real));
    }
}

#[test]
fn proper_structure_matches_oracle() {
    let mut rng = random::seeded(23);
    for n in [1, 2, 3, 7, 30, 80] {
        for _ in 0..10 {
            let real = random::proper_intervals(n, &mut rng);
            let g = ProperIntervalGraph::build(&real).unwrap();
            assert_matches_oracle(&g, &OracleGraph::from_intervals(&real));
        }
    }
}

#[test]
fn kproper_structures_match_oracle() {
    let mut rng = random::seeded(24);
    for n in [1, 2, 5, 20, 70] {
        for _ in 0..10 {
            let real = random::intervals(n, &mut rng);
            let o = OracleGraph::from_intervals(&real);
            for mode in [Containment::Proper, Containment::Improper] {
                assert_matches_oracle(&KProperGraph::build(&real, mode), &o);
            }
        }
    }
}

/// Depth by direct pair counting.
fn brute_depths(real: &IntervalRealization, mode: Containment) -> Vec<usize> {
    let iv = real.intervals();
    let inside = |a: (usize, usize), b: (usize, usize)| b.0 < a.0 && a.1 < b.1;
    iv.iter()
        .map(|&a| {
            iv.iter()
                .filter(|&&b| match mode {
                    Containment::Proper => inside(a, b),
                    Containment::Improper => inside(b, a),
                })
                .count()
        })
        .collect()
}

#[test]
fn depths_match_pair_counting() {
    let mut rng = random::seeded(25);
    for n in [1, 4, 16, 90] {
        for _ in 0..10 {
            let real = random::intervals(n, &mut rng);
            for mode in [Containment::Proper, Containment::Improper] {
                let g = KProperGraph::build(&real, mode);
                let expected = brute_depths(&real, mode);
                let got: Vec<usize> = (1..=n).map(|v| g.depth(v).unwrap()).collect();
                assert_eq!(got, expected);
                assert_eq!(g.k(), expected.iter().copied().max().unwrap());
            }
        }
    }
}

#[test]
fn proper_generator_never_nests() {
    let mut rng = random::seeded(26);
    for n in 1..50 {
        let real = random::proper_intervals(n, &mut rng);
        assert!(brute_depths(&real, Containment::Proper).iter().all(|&d| d == 0));
    }
}

#[test]
fn nested_input_is_not_proper() {
    let real = IntervalRealization::new(vec![(1, 4), (2, 3)]).unwrap();
    assert!(ProperIntervalGraph::build(&real).is_err());
}

#[test]
fn verify_passes_for_every_type() {
    for ty in GraphType::ALL {
        let report = verify::verify_random(ty, 25, 7, 8).unwrap();
        assert!(report.passed(), "{}", report.summary());
    }
}

#[test]
fn shrinking_reaches_a_small_counterexample() {
    let mut rng = random::seeded(27);
    let instance = Instance::Intervals(random::intervals(30, &mut rng));
    // A fake failure: any instance with a vertex of degree at least 3.
    let fails = |i: &Instance| {
        let Instance::Intervals(real) = i else { return None };
        let o = OracleGraph::from_intervals(real);
        (1..=o.n()).any(|v| o.degree(v) >= 3).then(|| verify::Mismatch { check: "degree", detail: String::new() })
    };
    let first = fails(&instance).expect("dense random instance");
    let (small, _) = verify::shrink_by(instance, first, fails);
    assert_eq!(small.n(), 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn degree_is_neighborhood_size(
        raw in prop::collection::vec((-50.0f64..50.0, 0.0f64..30.0), 1..40)
    ) {
        let raw: Vec<(f64, f64)> = raw.into_iter().map(|(a, len)| (a, a + len)).collect();
        let real = IntervalRealization::normalize(&raw).unwrap();
        let g = SuccinctIntervalGraph::build(&real);
        let o = OracleGraph::from_intervals(&real);
        let mut degrees = Vec::new();
        for v in 1..=real.n() {
            let d = g.degree(v).unwrap();
            prop_assert_eq!(d, g.neighborhood(v).unwrap().len());
            prop_assert_eq!(d, (1..=real.n()).filter(|&u| o.adjacent(u, v)).count());
            degrees.push(d);
        }
        // Normalization relabels vertices but keeps the graph.
        let raw_oracle = OracleGraph::from_raw_intervals(&raw);
        let mut raw_degrees: Vec<usize> = (1..=raw.len()).map(|v| raw_oracle.degree(v)).collect();
        degrees.sort_unstable();
        raw_degrees.sort_unstable();
        prop_assert_eq!(degrees, raw_degrees);
    }

    #[test]
    fn serialization_is_byte_stable(seed in any::<u64>(), n in 1usize..60) {
        let mut rng = random::seeded(seed);
        let intervals = Instance::Intervals(random::intervals(n, &mut rng));
        let proper = Instance::Intervals(random::proper_intervals(n, &mut rng));
        let arcs = Instance::Arcs(random::arcs(n, &mut rng));
        for ty in GraphType::ALL {
            let instance = match ty {
                GraphType::Proper => &proper,
                GraphType::Circular => &arcs,
                _ => &intervals,
            };
            let g = build_graph(ty, instance, false).unwrap();
            let mut bytes = Vec::new();
            g.write_to(&mut bytes).unwrap();
            let back = AnyGraph::from_bytes(&bytes).unwrap();
            prop_assert_eq!(&back, &g);
            let mut again = Vec::new();
            back.write_to(&mut again).unwrap();
            prop_assert_eq!(&again, &bytes);
            prop_assert!(AnyGraph::from_bytes(&bytes[..bytes.len() - 1]).is_err());
        }
    }
}
