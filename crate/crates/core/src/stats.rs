//! Space and timing reports.

use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::Rng;
use serde::Serialize;

use crate::io::{build_graph, AnyGraph, GraphType};
use crate::primitives::{bit_width, SpaceComponent, SpaceUsage};
use crate::random;
use crate::verify::random_instance;
use crate::error::Result;

#[derive(Clone, Debug, Serialize)]
pub struct QueryTiming {
    pub query: &'static str,
    pub count: usize,
    pub nanos_per_query: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct StatsReport {
    pub kind: &'static str,
    pub n: usize,
    /// Largest depth, for k-proper and k-improper structures.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Number of normal (non-wrapping) arcs, for circular-arc structures.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    pub edges: usize,
    pub total_bits: u64,
    pub components: Vec<SpaceComponent>,
    pub bits_per_vertex: f64,
    /// `n * 2 * ceil(log2(2n))`: both endpoints stored as plain integers.
    pub naive_endpoint_bits: u64,
    /// Compressed adjacency lists: offsets plus one `ceil(log2 n)`-bit entry
    /// per directed edge.
    pub adjacency_list_bits: u64,
    pub build_seconds: Option<f64>,
    pub queries: Vec<QueryTiming>,
}

fn ceil_log2(x: u64) -> u64 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros() as u64
    }
}

impl StatsReport {
    pub fn new(graph: &AnyGraph) -> Self {
        let g = graph.queries();
        let n = g.vertex_count();
        let degree_sum: usize = (1..=n).map(|v| g.degree(v).unwrap()).sum();
        let components = graph.space_breakdown();
        let total_bits: u64 = components.iter().map(|c| c.bits).sum();
        let n64 = n as u64;
        StatsReport {
            kind: graph.kind(),
            n,
            k: match graph {
                AnyGraph::KProper(g) => Some(g.k()),
                _ => None,
            },
            q: match graph {
                AnyGraph::Circular(g) => Some(g.normal_count()),
                _ => None,
            },
            edges: degree_sum / 2,
            total_bits,
            components,
            bits_per_vertex: total_bits as f64 / n as f64,
            naive_endpoint_bits: n64 * 2 * ceil_log2(2 * n64),
            adjacency_list_bits: (n64 + 1) * bit_width(degree_sum as u64) as u64
                + degree_sum as u64 * ceil_log2(n64).max(1),
            build_seconds: None,
            queries: Vec::new(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "kind: {}", self.kind).unwrap();
        writeln!(out, "n: {}", self.n).unwrap();
        if let Some(k) = self.k {
            writeln!(out, "k: {k}").unwrap();
        }
        if let Some(q) = self.q {
            writeln!(out, "q: {q}").unwrap();
        }
        writeln!(out, "edges: {}", self.edges).unwrap();
        writeln!(out, "total bits: {}", self.total_bits).unwrap();
        writeln!(out, "bits per vertex: {:.2}", self.bits_per_vertex).unwrap();
        for c in &self.components {
            writeln!(out, "  {:<20} {}", c.name, c.bits).unwrap();
        }
        writeln!(out, "naive endpoint baseline: {} bits", self.naive_endpoint_bits).unwrap();
        writeln!(out, "adjacency list baseline: {} bits", self.adjacency_list_bits).unwrap();
        if let Some(s) = self.build_seconds {
            writeln!(out, "build: {:.3} ms", s * 1e3).unwrap();
        }
        for q in &self.queries {
            writeln!(out, "{:<13} {:>10.1} ns/query ({} queries)", q.query, q.nanos_per_query, q.count).unwrap();
        }
        out
    }
}

/// Wall-clock budget per query kind; large neighborhoods stop early.
const BUDGET: Duration = Duration::from_secs(2);

/// Builds a random instance of `ty` and times up to `queries` random calls of
/// each query kind, split over `threads` readers. A kind stops early once it
/// has run for two seconds; the report records how many calls completed.
pub fn run_bench(ty: GraphType, n: usize, queries: usize, seed: u64, threads: usize) -> Result<StatsReport> {
    let mut rng = random::seeded(seed);
    let instance = random_instance(ty, n, &mut rng);
    let start = Instant::now();
    let graph = build_graph(ty, &instance, false)?;
    let build = start.elapsed().as_secs_f64();
    let mut report = StatsReport::new(&graph);
    report.build_seconds = Some(build);

    let pairs: Vec<(usize, usize)> = (0..queries).map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n))).collect();
    let threads = threads.max(1);
    let g = graph.queries();
    let kinds: [(&'static str, &(dyn Fn(usize, usize) + Sync)); 4] = [
        ("degree", &|u, _| drop(g.degree(u))),
        ("adjacent", &|u, v| drop(g.adjacent(u, v))),
        ("neighborhood", &|u, _| drop(g.neighborhood(u))),
        ("spath", &|u, v| drop(g.spath(u, v))),
    ];
    for (name, run) in kinds {
        let done = AtomicUsize::new(0);
        let start = Instant::now();
        std::thread::scope(|scope| {
            for chunk in pairs.chunks(pairs.len().div_ceil(threads).max(1)) {
                let done = &done;
                scope.spawn(move || {
                    for &(u, v) in chunk {
                        if start.elapsed() > BUDGET {
                            break;
                        }
                        run(u, v);
                        done.fetch_add(1, Ordering::Relaxed);
                    }
                });
            }
        });
        let elapsed = start.elapsed().as_nanos() as f64;
        let count = done.into_inner();
        report.queries.push(QueryTiming {
            query: name,
            count,
            nanos_per_query: if count == 0 { 0.0 } else { elapsed / count as f64 },
        });
    }
    Ok(report)
}
