//! Shared workloads for the criterion benchmarks.

use rand::Rng;
use sig_core::io::{build_graph, AnyGraph, GraphType, Instance};
use sig_core::random;
use sig_core::verify::random_instance;

pub struct Workload {
    pub instance: Instance,
    pub graph: AnyGraph,
    /// Random vertex pairs, 1-based.
    pub pairs: Vec<(usize, usize)>,
}

pub fn workload(ty: GraphType, n: usize, queries: usize, seed: u64) -> Workload {
    let mut rng = random::seeded(seed);
    let instance = random_instance(ty, n, &mut rng);
    let graph = build_graph(ty, &instance, false).expect("random instances are valid");
    let pairs = (0..queries).map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n))).collect();
    Workload { instance, graph, pairs }
}

/// Uniform random bits with the given density of ones.
pub fn random_bits(len: usize, density: f64, seed: u64) -> Vec<bool> {
    let mut rng = random::seeded(seed);
    (0..len).map(|_| rng.gen_bool(density)).collect()
}

pub fn random_values(len: usize, bound: u64, seed: u64) -> Vec<u64> {
    let mut rng = random::seeded(seed);
    (0..len).map(|_| rng.gen_range(0..bound)).collect()
}
