use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use serde_json::json;

use sig_core::io::{build_graph, parse_text, AnyGraph, GraphType, Instance, InputKind};
use sig_core::stats::{run_bench, StatsReport};
use sig_core::{algorithms, verify, Anchor, SuccinctIntervalGraph};

#[derive(Parser)]
#[command(name = "sig", version, about = "Succinct interval and circular-arc graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a structure from a text realization and write it in binary form.
    Build {
        #[arg(long = "type", default_value = "interval")]
        ty: GraphType,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        /// 1-based arc (in input order) whose start becomes position 1.
        #[arg(long)]
        anchor: Option<usize>,
        /// Store all degrees explicitly (circular only).
        #[arg(long)]
        degree_table: bool,
        #[arg(long)]
        json: bool,
    },
    /// Answer one query against a built structure or a text realization.
    Query {
        file: PathBuf,
        /// Structure to build when FILE is text.
        #[arg(long = "type")]
        ty: Option<GraphType>,
        #[arg(long)]
        json: bool,
        #[command(subcommand)]
        query: Query,
    },
    /// Run one of the interval-graph algorithms.
    Algo {
        file: PathBuf,
        algorithm: Algorithm,
        #[arg(long = "type")]
        ty: Option<GraphType>,
        #[arg(long)]
        json: bool,
    },
    /// Compare every query and algorithm with the brute-force oracle.
    Verify {
        #[arg(long = "type", default_value = "interval")]
        ty: GraphType,
        #[arg(long, conflicts_with = "random")]
        input: Option<PathBuf>,
        /// Check random instances with this many vertices.
        #[arg(long, value_name = "N")]
        random: Option<usize>,
        #[arg(long, env = "SIG_SEED", default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
    /// Print the space breakdown of a structure.
    Stats {
        file: PathBuf,
        #[arg(long = "type")]
        ty: Option<GraphType>,
        #[arg(long)]
        json: bool,
    },
    /// Build a random instance and time random queries.
    Bench {
        #[arg(long = "type", default_value = "interval")]
        ty: GraphType,
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        queries: usize,
        #[arg(long, env = "SIG_SEED", default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum Query {
    Degree { v: usize },
    Adjacent { u: usize, v: usize },
    Neighborhood { v: usize },
    Spath { u: usize, v: usize },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Algorithm {
    Mis,
    Mvc,
    Clique,
    Coloring,
    Dfs,
    Bfs,
    Peo,
}

/// An error paired with the process exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

const INTERNAL: u8 = 1;
const INPUT: u8 = 2;
const QUERY: u8 = 3;
const MISMATCH: u8 = 4;

trait ExitWith<T> {
    fn exit_with(self, code: u8) -> Result<T, Failure>;
}

impl<T, E: Into<anyhow::Error>> ExitWith<T> for Result<T, E> {
    fn exit_with(self, code: u8) -> Result<T, Failure> {
        self.map_err(|e| Failure { code, error: e.into() })
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn default_type(kind: InputKind) -> GraphType {
    match kind {
        InputKind::Intervals => GraphType::Interval,
        InputKind::Arcs => GraphType::Circular,
    }
}

fn read_instance(path: &Path, anchor: Option<usize>) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .exit_with(INPUT)?;
    let input = parse_text(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .exit_with(INPUT)?;
    let anchor = anchor.map_or(Anchor::MinStart, Anchor::Arc);
    Instance::from_text(&input, anchor).exit_with(INPUT)
}

/// Loads a binary structure, or builds one from a text realization.
fn load(path: &Path, ty: Option<GraphType>) -> Result<AnyGraph, Failure> {
    let bytes = fs::read(path)
        .with_context(|| format!("reading {}", path.display()))
        .exit_with(INPUT)?;
    if AnyGraph::is_serialized(&bytes) {
        return AnyGraph::from_bytes(&bytes)
            .with_context(|| format!("loading {}", path.display()))
            .exit_with(INPUT);
    }
    let text = String::from_utf8(bytes)
        .map_err(|_| anyhow!("{} is neither a structure nor text", path.display()))
        .exit_with(INPUT)?;
    let input = parse_text(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .exit_with(INPUT)?;
    let instance = Instance::from_text(&input, Anchor::MinStart).exit_with(INPUT)?;
    build_graph(ty.unwrap_or(default_type(input.kind)), &instance, false).exit_with(INPUT)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Build { ty, input, output, anchor, degree_table, json } => {
            let instance = read_instance(&input, anchor)?;
            if degree_table && ty != GraphType::Circular {
                return Err(anyhow!("--degree-table applies to circular graphs only")).exit_with(INPUT);
            }
            let graph = build_graph(ty, &instance, degree_table).exit_with(INPUT)?;
            let mut bytes = Vec::new();
            graph.write_to(&mut bytes).exit_with(INTERNAL)?;
            fs::write(&output, bytes)
                .with_context(|| format!("writing {}", output.display()))
                .exit_with(INPUT)?;
            print_report(&StatsReport::new(&graph), json)?;
        }
        Command::Query { file, ty, json, query } => {
            let graph = load(&file, ty)?;
            let g = graph.queries();
            let (name, args, text, value) = match query {
                Query::Degree { v } => {
                    let d = g.degree(v).exit_with(QUERY)?;
                    ("degree", vec![v], d.to_string(), json!(d))
                }
                Query::Adjacent { u, v } => {
                    let a = g.adjacent(u, v).exit_with(QUERY)?;
                    ("adjacent", vec![u, v], a.to_string(), json!(a))
                }
                Query::Neighborhood { v } => {
                    let nb = g.neighborhood(v).exit_with(QUERY)?;
                    ("neighborhood", vec![v], join(&nb), json!(nb))
                }
                Query::Spath { u, v } => {
                    let path = g.spath(u, v).exit_with(QUERY)?;
                    let text = path.as_deref().map_or_else(|| "none".to_string(), join);
                    ("spath", vec![u, v], text, json!(path))
                }
            };
            if json {
                println!("{}", json!({ "query": name, "args": args, "result": value }));
            } else {
                println!("{text}");
            }
        }
        Command::Algo { file, algorithm, ty, json } => {
            let graph = load(&file, ty)?;
            let g = graph
                .to_interval_graph()
                .ok_or_else(|| anyhow!("algorithms need an interval-type structure, not {}", graph.kind()))
                .exit_with(INPUT)?;
            run_algorithm(&g, algorithm, json);
        }
        Command::Verify { ty, input, random, seed, trials } => {
            let report = match (input, random) {
                (Some(path), _) => {
                    let instance = read_instance(&path, None)?;
                    let mismatch = verify::check_instance(ty, &instance).exit_with(INPUT)?;
                    let failures = mismatch
                        .map(|m| {
                            let (instance, mismatch) = verify::shrink(ty, instance, m);
                            verify::Failure { trial: 1, mismatch, instance }
                        })
                        .into_iter()
                        .collect();
                    verify::Report { ty, trials: 1, failures }
                }
                (None, Some(n)) if n > 0 => verify::verify_random(ty, n, seed, trials).exit_with(INPUT)?,
                (None, Some(_)) => return Err(anyhow!("--random needs at least one vertex")).exit_with(INPUT),
                (None, None) => return Err(anyhow!("give --input FILE or --random N")).exit_with(INPUT),
            };
            print!("{}", report.summary());
            if !report.passed() {
                return Err(Failure { code: MISMATCH, error: anyhow!("oracle mismatch") });
            }
        }
        Command::Stats { file, ty, json } => {
            let graph = load(&file, ty)?;
            print_report(&StatsReport::new(&graph), json)?;
        }
        Command::Bench { ty, n, queries, seed, threads, json } => {
            if n == 0 {
                return Err(anyhow!("--n must be at least 1")).exit_with(INPUT);
            }
            let report = run_bench(ty, n, queries, seed, threads).exit_with(INPUT)?;
            print_report(&report, json)?;
        }
    }
    Ok(())
}

fn print_report(report: &StatsReport, json: bool) -> Result<(), Failure> {
    if json {
        println!("{}", serde_json::to_string(report).exit_with(INTERNAL)?);
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}

fn run_algorithm(g: &SuccinctIntervalGraph, algorithm: Algorithm, json: bool) {
    let list = |name: &str, vs: Vec<usize>| {
        if json {
            println!("{}", json!({ "algorithm": name, "vertices": vs }));
        } else {
            println!("{}", join(&vs));
        }
    };
    match algorithm {
        Algorithm::Mis => list("mis", algorithms::mis(g)),
        Algorithm::Mvc => list("mvc", algorithms::mvc(g)),
        Algorithm::Dfs => list("dfs", algorithms::dfs_order(g)),
        Algorithm::Bfs => list("bfs", algorithms::bfs_order(g)),
        Algorithm::Peo => list("peo", algorithms::peo(g)),
        Algorithm::Clique => {
            let c = algorithms::max_clique(g);
            if json {
                println!("{}", json!({ "algorithm": "clique", "size": c.size(), "cut": c.cut, "members": c.members }));
            } else {
                println!("size {}\ncut {}\nmembers {}", c.size(), c.cut, join(&c.members));
            }
        }
        Algorithm::Coloring => {
            let c = algorithms::greedy_coloring(g);
            if json {
                println!("{}", json!({ "algorithm": "coloring", "colors_used": c.num_colors(), "colors": c.colors() }));
            } else {
                println!("colors {}\n{}", c.num_colors(), join(&c.colors()));
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}
