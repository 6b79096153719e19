//! Oracle comparison of every query and algorithm on one instance, random
//! trial runs, and shrinking of failing instances.

use std::fmt::Write as _;

use crate::algorithms;
use crate::error::{Error, Result};
use crate::io::{build_graph, AnyGraph, GraphType, Instance};
use crate::oracle::{self, OracleGraph, EXHAUSTIVE_LIMIT, POLY_LIMIT};
use crate::random;
use crate::circular::{Anchor, ArcRealization};
use crate::interval::IntervalRealization;

/// Exhaustive oracles are run up to this size.
pub const EXHAUSTIVE_CHECK: usize = 18;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub check: &'static str,
    pub detail: String,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

fn fail(check: &'static str, detail: String) -> Option<Mismatch> {
    Some(Mismatch { check, detail })
}

/// First disagreement between the structure of type `ty` built from
/// `instance` and the oracle, or `None` when everything matches.
pub fn check_instance(ty: GraphType, instance: &Instance) -> Result<Option<Mismatch>> {
    let n = instance.n();
    if n > POLY_LIMIT {
        return Err(Error::OracleLimit { what: "verify", limit: POLY_LIMIT, n });
    }
    let graph = build_graph(ty, instance, false)?;
    let oracle = match instance {
        Instance::Intervals(r) => OracleGraph::from_intervals(r),
        Instance::Arcs(r) => OracleGraph::from_arcs(r),
    };
    if let Some(m) = check_queries(&graph, &oracle) {
        return Ok(Some(m));
    }
    if let Some(m) = check_round_trip(&graph, instance) {
        return Ok(Some(m));
    }
    if let Instance::Intervals(real) = instance {
        let g = graph.to_interval_graph().expect("interval type");
        if let Some(m) = check_algorithms(&g, real, &oracle)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

fn check_queries(graph: &AnyGraph, oracle: &OracleGraph) -> Option<Mismatch> {
    let g = graph.queries();
    let n = oracle.n();
    for u in 1..=n {
        let degree = g.degree(u).ok()?;
        let nb = g.neighborhood(u).ok()?;
        if degree != oracle.degree(u) || degree != nb.len() {
            return fail("degree", format!("degree({u}) = {degree}, |neighborhood| = {}, oracle {}", nb.len(), oracle.degree(u)));
        }
        if nb != oracle.neighborhood(u) {
            return fail("neighborhood", format!("neighborhood({u}) = {nb:?}, oracle {:?}", oracle.neighborhood(u)));
        }
        let dist = oracle.distances_from(u);
        for v in 1..=n {
            let adj = g.adjacent(u, v).ok()?;
            if adj != oracle.adjacent(u, v) {
                return fail("adjacent", format!("adjacent({u}, {v}) = {adj}"));
            }
            let path = g.spath(u, v).ok()?;
            let ok = match (&path, dist[v]) {
                (None, None) => true,
                (Some(p), Some(d)) => {
                    p.len() == d + 1 && p[0] == u && p[d] == v && oracle.is_path(p)
                }
                _ => false,
            };
            if !ok {
                return fail("spath", format!("spath({u}, {v}) = {path:?}, oracle distance {:?}", dist[v]));
            }
        }
    }
    None
}

fn check_round_trip(graph: &AnyGraph, instance: &Instance) -> Option<Mismatch> {
    let mut bytes = Vec::new();
    graph.write_to(&mut bytes).ok()?;
    match AnyGraph::from_bytes(&bytes) {
        Ok(back) if back == *graph => {}
        Ok(_) => return fail("serialization", "reloaded structure differs".into()),
        Err(e) => return fail("serialization", e.to_string()),
    }
    if graph.instance() != *instance {
        return fail("decode", "decoded realization differs from the input".into());
    }
    None
}

fn check_algorithms(
    g: &crate::SuccinctIntervalGraph,
    real: &IntervalRealization,
    oracle: &OracleGraph,
) -> Result<Option<Mismatch>> {
    let n = real.n();
    let order = algorithms::dfs_order(g);
    if !oracle.valid_dfs(&order) {
        return Ok(fail("dfs", format!("{order:?} is not a DFS order")));
    }
    if !oracle.valid_bfs(&algorithms::bfs_order(g)) {
        return Ok(fail("bfs", "vertex order is not a BFS order".into()));
    }
    if !oracle.is_peo(&algorithms::peo(g)) {
        return Ok(fail("peo", "vertex order is not a perfect elimination ordering".into()));
    }
    let mis = algorithms::mis(g);
    let mis_size = oracle::interval_mis_size(real)?;
    if !oracle.is_independent(&mis) || mis.len() != mis_size {
        return Ok(fail("mis", format!("{mis:?}, oracle size {mis_size}")));
    }
    let mvc = algorithms::mvc(g);
    if !oracle.is_vertex_cover(&mvc) || mvc.len() + mis.len() != n {
        return Ok(fail("mvc", format!("{mvc:?}")));
    }
    let clique = algorithms::max_clique(g);
    let omega = oracle::interval_clique_size(real)?;
    if !oracle.is_clique(&clique.members) || clique.size() != omega {
        return Ok(fail("clique", format!("{:?}, oracle size {omega}", clique.members)));
    }
    let coloring = algorithms::greedy_coloring(g);
    if !oracle.is_proper_coloring(&coloring.colors()) || coloring.num_colors() != omega {
        return Ok(fail("coloring", format!("{:?}, clique number {omega}", coloring.colors())));
    }
    if n <= EXHAUSTIVE_CHECK.min(EXHAUSTIVE_LIMIT) {
        let exact_mis = oracle.mis_size_exhaustive()?;
        let exact_clique = oracle.clique_size_exhaustive()?;
        if exact_mis != mis.len() || exact_clique != clique.size() {
            return Ok(fail(
                "exhaustive",
                format!("mis {} vs {exact_mis}, clique {} vs {exact_clique}", mis.len(), clique.size()),
            ));
        }
    }
    Ok(None)
}

/// A random instance suited to `ty`.
pub fn random_instance(ty: GraphType, n: usize, rng: &mut impl rand::Rng) -> Instance {
    match ty {
        GraphType::Circular => Instance::Arcs(random::arcs(n, rng)),
        GraphType::Proper => Instance::Intervals(random::proper_intervals(n, rng)),
        _ => Instance::Intervals(random::intervals(n, rng)),
    }
}

fn without(instance: &Instance, skip: usize) -> Option<Instance> {
    let raw: Vec<(f64, f64)> =
        instance.to_raw().into_iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, p)| p).collect();
    match instance {
        Instance::Intervals(_) => IntervalRealization::normalize(&raw).ok().map(Instance::Intervals),
        Instance::Arcs(_) => ArcRealization::normalize(&raw, Anchor::MinStart).ok().map(Instance::Arcs),
    }
}

/// Greedily drops vertices while the instance keeps failing.
pub fn shrink(ty: GraphType, instance: Instance, mismatch: Mismatch) -> (Instance, Mismatch) {
    shrink_by(instance, mismatch, |i| check_instance(ty, i).ok().flatten())
}

/// Shrinks with an arbitrary failure predicate.
pub fn shrink_by(
    instance: Instance,
    mismatch: Mismatch,
    fails: impl Fn(&Instance) -> Option<Mismatch>,
) -> (Instance, Mismatch) {
    let (mut cur, mut mismatch) = (instance, mismatch);
    'outer: loop {
        for i in 0..cur.n() {
            if let Some(smaller) = without(&cur, i) {
                if let Some(m) = fails(&smaller) {
                    cur = smaller;
                    mismatch = m;
                    continue 'outer;
                }
            }
        }
        return (cur, mismatch);
    }
}

#[derive(Clone, Debug)]
pub struct Failure {
    pub trial: usize,
    pub mismatch: Mismatch,
    /// Smallest failing instance found by shrinking.
    pub instance: Instance,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub ty: GraphType,
    pub trials: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "{status} {}: {} of {} trials matched the oracle", self.ty, self.trials - self.failures.len(), self.trials).unwrap();
        for f in &self.failures {
            writeln!(out, "trial {}: {}", f.trial, f.mismatch).unwrap();
            writeln!(out, "minimal counterexample:").unwrap();
            out.push_str(&f.instance.to_text());
        }
        out
    }
}

/// Checks `trials` random instances of size `n` drawn from `seed`.
pub fn verify_random(ty: GraphType, n: usize, seed: u64, trials: usize) -> Result<Report> {
    let mut rng = random::seeded(seed);
    let mut failures = Vec::new();
    for trial in 1..=trials {
        let instance = random_instance(ty, n, &mut rng);
        if let Some(mismatch) = check_instance(ty, &instance)? {
            let (instance, mismatch) = shrink(ty, instance, mismatch);
            failures.push(Failure { trial, mismatch, instance });
        }
    }
    Ok(Report { ty, trials, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{nine_intervals, seven_arcs};

    #[test]
    fn fixtures_pass() {
        let fig1 = Instance::Intervals(nine_intervals());
        for ty in [GraphType::Interval, GraphType::KProper, GraphType::KImproper] {
            assert_eq!(check_instance(ty, &fig1).unwrap(), None);
        }
        assert!(check_instance(GraphType::Proper, &fig1).is_err());
        let fig2 = Instance::Arcs(ArcRealization::normalize(&seven_arcs(), Anchor::MinStart).unwrap());
        assert_eq!(check_instance(GraphType::Circular, &fig2).unwrap(), None);
        assert!(check_instance(GraphType::Interval, &fig2).is_err());
    }

    #[test]
    fn random_runs_pass() {
        for ty in GraphType::ALL {
            let report = verify_random(ty, 12, 3, 5).unwrap();
            assert!(report.passed(), "{}", report.summary());
            assert!(report.summary().starts_with("PASS"));
        }
    }

    #[test]
    fn shrinking_reaches_a_small_instance() {
        let has_edge = |i: &Instance| {
            let Instance::Intervals(r) = i else { return None };
            let o = OracleGraph::from_intervals(r);
            (1..=r.n()).any(|v| o.degree(v) > 0).then(|| Mismatch { check: "edge", detail: String::new() })
        };
        let inst = Instance::Intervals(random::intervals(15, &mut random::seeded(5)));
        let first = has_edge(&inst).unwrap();
        let (small, _) = shrink_by(inst, first, has_edge);
        assert_eq!(small.n(), 2);
    }
}
