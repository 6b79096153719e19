//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines always print; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use sig_core::algorithms::{
    bfs_order, depth_sequence, dfs_order, greedy_coloring, max_clique, mis, mvc, peo,
};
use sig_core::fixtures::{nine_intervals, seven_arcs};
use sig_core::oracle::{interval_clique_size, interval_mis_size, OracleGraph};
use sig_core::variants::Containment;
use sig_core::{
    random, Anchor, ArcRealization, CircularArcGraph, GraphQueries, IntervalRealization,
    KProperGraph, ProperIntervalGraph, SpaceUsage, SuccinctIntervalGraph,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

/// Degree-convention checks made along the way by the oracle comparisons.
#[derive(Default)]
struct DegreeLog {
    vertices: usize,
    failure: Option<String>,
}

impl DegreeLog {
    fn record(&mut self, label: &str, v: usize, degree: usize, neighborhood: usize, row_sum: usize) {
        self.vertices += 1;
        if self.failure.is_none() && !(degree == neighborhood && degree == row_sum) {
            self.failure = Some(format!(
                "{label}: degree({v}) = {degree}, |neighborhood| = {neighborhood}, oracle row sum {row_sum}"
            ));
        }
    }
}

/// All-pairs comparison of the four queries against the oracle.
fn match_oracle(label: &str, g: &dyn GraphQueries, o: &OracleGraph, log: &mut DegreeLog) -> Result<(), String> {
    let n = o.n();
    for u in 1..=n {
        let degree = g.degree(u).map_err(|e| e.to_string())?;
        let nb = g.neighborhood(u).map_err(|e| e.to_string())?;
        let row_sum = (1..=n).filter(|&v| o.adjacent(u, v)).count();
        log.record(label, u, degree, nb.len(), row_sum);
        ensure(degree == row_sum, || format!("{label}: degree({u}) = {degree}, oracle {row_sum}"))?;
        ensure(nb == o.neighborhood(u), || format!("{label}: neighborhood({u}) = {nb:?}"))?;
        let dist = o.distances_from(u);
        for v in 1..=n {
            let adj = g.adjacent(u, v).map_err(|e| e.to_string())?;
            ensure(adj == o.adjacent(u, v), || format!("{label}: adjacent({u}, {v}) = {adj}"))?;
            let path = g.spath(u, v).map_err(|e| e.to_string())?;
            let ok = match (&path, dist[v]) {
                (None, None) => true,
                (Some(p), Some(d)) => p.len() == d + 1 && p[0] == u && p[d] == v && o.is_path(p),
                _ => false,
            };
            ensure(ok, || format!("{label}: spath({u}, {v}) = {path:?}, oracle distance {:?}", dist[v]))?;
        }
    }
    Ok(())
}

fn within(start: Instant, limit: Duration, summary: String) -> Outcome {
    let took = start.elapsed();
    if took <= limit {
        Ok(format!("{summary} in {:.2} s", took.as_secs_f64()))
    } else {
        Err(format!("{summary} but took {:.2} s, limit {} s", took.as_secs_f64(), limit.as_secs()))
    }
}

fn nine_intervals_golden() -> Outcome {
    let start = Instant::now();
    let g = SuccinctIntervalGraph::build(&nine_intervals());
    let one_to_nine: Vec<usize> = (1..=9).collect();
    ensure(mis(&g) == [2, 5, 9], || format!("MIS {:?}", mis(&g)))?;
    ensure(mvc(&g) == [1, 3, 4, 6, 7, 8], || format!("MVC {:?}", mvc(&g)))?;
    let succ = (g.succ(2).unwrap(), g.succ(5).unwrap());
    ensure(succ == (Some(3), Some(6)), || format!("SUCC(2), SUCC(5) = {succ:?}"))?;
    let d = depth_sequence(&g);
    ensure(d == [1, 2, 3, 4, 3, 2, 3, 2, 1, 2, 3, 2, 3, 4, 3, 2, 1, 0], || format!("D = {d:?}"))?;
    ensure(max_clique(&g).size() == 4, || format!("clique {:?}", max_clique(&g)))?;
    let k = KProperGraph::build(&nine_intervals(), Containment::Proper);
    let t: Vec<u64> = k.symbols().iter().collect();
    ensure(t == [0, 2, 0, 2, 3, 1, 0, 3, 1, 0, 2, 1, 2, 4, 3, 5, 3, 1], || format!("T = {t:?}"))?;
    let classes = k.depth_classes();
    ensure(classes == [vec![1, 3, 5, 6], vec![2, 4, 7, 8], vec![9]], || format!("depth classes {classes:?}"))?;
    ensure(dfs_order(&g) == one_to_nine, || format!("DFS {:?}", dfs_order(&g)))?;
    ensure(bfs_order(&g) == one_to_nine, || format!("BFS {:?}", bfs_order(&g)))?;
    within(start, Duration::from_secs(1), "MIS, MVC, SUCC, D, clique, T, depth classes, DFS/BFS".into())
}

fn interval_equivalence(log: &mut DegreeLog) -> Outcome {
    let start = Instant::now();
    let mut rng = random::seeded(101);
    for n in [10, 50, 200] {
        for trial in 0..50 {
            let real = random::intervals(n, &mut rng);
            let label = format!("n={n} trial {trial}");
            match_oracle(&label, &SuccinctIntervalGraph::build(&real), &OracleGraph::from_intervals(&real), log)?;
        }
    }
    within(start, Duration::from_secs(60), "150 instances at n = 10, 50, 200 match all-pairs".into())
}

fn circular_equivalence(log: &mut DegreeLog) -> Outcome {
    let start = Instant::now();
    let real = ArcRealization::normalize(&seven_arcs(), Anchor::MinStart).map_err(|e| e.to_string())?;
    let g = CircularArcGraph::build(&real);
    let r: Vec<usize> = (1..=7).map(|v| g.arc(v).unwrap().1).collect();
    ensure(r == [3, 7, 8, 2, 14, 12, 10], || format!("r = {r:?}"))?;
    ensure(g.normal_rights() == [3, 7, 8, 14, 12], || format!("r' = {:?}", g.normal_rights()))?;
    ensure(g.reversed_rights() == [2, 10], || format!("r'' = {:?}", g.reversed_rights()))?;
    ensure(real.reversed() == [4, 7], || format!("reversed {:?}", real.reversed()))?;
    match_oracle("seven arcs", &g, &OracleGraph::from_arcs(&real), log)?;

    let mut rng = random::seeded(102);
    for n in [10, 50, 200] {
        for trial in 0..50 {
            let real = random::arcs(n, &mut rng);
            ensure(!real.reversed().is_empty(), || format!("n={n} trial {trial} has no reversed arc"))?;
            let label = format!("arcs n={n} trial {trial}");
            match_oracle(&label, &CircularArcGraph::build(&real), &OracleGraph::from_arcs(&real), log)?;
        }
    }
    within(start, Duration::from_secs(120), "seven-arc r, r', r'', reversed {4, 7}; 150 arc instances match".into())
}

/// Every query of `other` agrees with the general structure.
fn same_answers(label: &str, base: &SuccinctIntervalGraph, other: &dyn GraphQueries) -> Result<(), String> {
    let n = base.n();
    for u in 1..=n {
        ensure(base.degree(u).unwrap() == other.degree(u).unwrap(), || format!("{label}: degree({u})"))?;
        ensure(base.neighborhood(u).unwrap() == other.neighborhood(u).unwrap(), || {
            format!("{label}: neighborhood({u})")
        })?;
        for v in 1..=n {
            ensure(base.adjacent(u, v).unwrap() == other.adjacent(u, v).unwrap(), || {
                format!("{label}: adjacent({u}, {v})")
            })?;
            ensure(base.spath(u, v).unwrap() == other.spath(u, v).unwrap(), || format!("{label}: spath({u}, {v})"))?;
        }
    }
    Ok(())
}

fn cross_representation() -> Outcome {
    let start = Instant::now();
    let mut rng = random::seeded(103);
    for trial in 0..20 {
        let real = random::intervals(200, &mut rng);
        let base = SuccinctIntervalGraph::build(&real);
        for mode in [Containment::Proper, Containment::Improper] {
            same_answers(&format!("{mode:?} trial {trial}"), &base, &KProperGraph::build(&real, mode))?;
        }
        let proper = random::proper_intervals(200, &mut rng);
        let base = SuccinctIntervalGraph::build(&proper);
        let g = ProperIntervalGraph::build(&proper).map_err(|e| e.to_string())?;
        same_answers(&format!("proper trial {trial}"), &base, &g)?;
        same_answers(&format!("k-proper on proper trial {trial}"), &base, &KProperGraph::build(&proper, Containment::Proper))?;
    }
    within(start, Duration::from_secs(600), "k-proper, k-improper and proper agree with the general structure on 20 instances at n = 200".into())
}

fn check_algorithms(label: &str, real: &IntervalRealization, exhaustive: bool) -> Result<(), String> {
    let g = SuccinctIntervalGraph::build(real);
    let o = OracleGraph::from_intervals(real);
    let omega = interval_clique_size(real).map_err(|e| e.to_string())?;
    let coloring = greedy_coloring(&g);
    ensure(o.is_proper_coloring(&coloring.colors()), || format!("{label}: coloring not proper"))?;
    ensure(coloring.num_colors() == omega, || format!("{label}: {} colors, clique number {omega}", coloring.num_colors()))?;
    ensure(o.is_peo(&peo(&g)), || format!("{label}: PEO predicate fails"))?;
    ensure(o.valid_dfs(&dfs_order(&g)), || format!("{label}: DFS order rejected"))?;
    ensure(o.valid_bfs(&bfs_order(&g)), || format!("{label}: BFS order rejected"))?;
    let set = mis(&g);
    let mis_size = interval_mis_size(real).map_err(|e| e.to_string())?;
    ensure(o.is_independent(&set) && set.len() == mis_size, || format!("{label}: MIS {set:?}, oracle size {mis_size}"))?;
    let clique = max_clique(&g);
    ensure(o.is_clique(&clique.members) && clique.size() == omega, || format!("{label}: clique {clique:?}"))?;
    if exhaustive {
        let exact_mis = o.mis_size_exhaustive().map_err(|e| e.to_string())?;
        let exact_clique = o.clique_size_exhaustive().map_err(|e| e.to_string())?;
        ensure(exact_mis == set.len() && exact_clique == clique.size(), || {
            format!("{label}: exhaustive MIS {exact_mis}, clique {exact_clique}")
        })?;
    }
    Ok(())
}

fn algorithm_validity() -> Outcome {
    let start = Instant::now();
    let mut rng = random::seeded(104);
    for trial in 0..50 {
        check_algorithms(&format!("n=200 trial {trial}"), &random::intervals(200, &mut rng), false)?;
    }
    for n in 1..=18 {
        for trial in 0..10 {
            check_algorithms(&format!("n={n} trial {trial}"), &random::intervals(n, &mut rng), true)?;
        }
    }
    within(start, Duration::from_secs(600), "coloring, PEO, DFS, BFS, MIS, clique valid on 50 instances at n = 200 and 180 exhaustive ones".into())
}

fn space_accounting() -> Outcome {
    let start = Instant::now();
    let n = 100_000usize;
    let mut rng = random::seeded(105);
    let general = SuccinctIntervalGraph::build(&random::intervals(n, &mut rng)).space_bits() as f64;
    let proper = ProperIntervalGraph::build(&random::proper_intervals(n, &mut rng))
        .map_err(|e| e.to_string())?
        .space_bits() as f64;
    let general_limit = 1.3 * n as f64 * (2.0 * n as f64).log2();
    let proper_limit = 3.0 * n as f64;
    let summary = format!(
        "general {general} bits (limit {general_limit:.0}), proper {proper} bits (limit {proper_limit:.0})"
    );
    ensure(general <= general_limit && proper <= proper_limit, || summary.clone())?;
    within(start, Duration::from_secs(30), summary)
}

fn degree_convention(log: &DegreeLog) -> Outcome {
    match &log.failure {
        Some(f) => Err(f.clone()),
        None if log.vertices == 0 => Err("no vertices were checked".into()),
        None => Ok(format!("degree = |neighborhood| = oracle row sum on {} vertices", log.vertices)),
    }
}

fn main() -> ExitCode {
    let mut log = DegreeLog::default();
    let results = [
        ("1 nine-interval golden values", nine_intervals_golden()),
        ("2 interval oracle equivalence", interval_equivalence(&mut log)),
        ("3 circular-arc oracle equivalence", circular_equivalence(&mut log)),
        ("4 cross-representation equivalence", cross_representation()),
        ("5 algorithm validity", algorithm_validity()),
        ("6 space accounting", space_accounting()),
        ("7 degree convention", degree_convention(&log)),
    ];
    let mut failed = false;
    for (name, result) in results {
        match result {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed = true;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
