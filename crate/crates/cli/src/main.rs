use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use swarmrank::experiments::{
    benchmark_speedup, iteration_trend_check, run_sweep, write_trend_csv, BenchmarkSpec, ExperimentId, SweepSpec,
    TrendSpec,
};
use swarmrank::io::{load_graph, load_roots, save_graph, write_graph, write_rank_csv};
use swarmrank::{
    generate_scale_free, indegree, pagerank, pagerank_priors, swarm_rank, DirectedGraph, ExecutionMode, PageRankParams,
    PriorsParams, Readout, Seeding, SwarmConfig, SwarmStats,
};

/// Exact and particle-swarm PageRank, PageRank-Priors and In-Degree.
#[derive(Parser, Debug)]
#[command(name = "swarmrank", version)]
struct Cli {
    /// RNG seed for every stochastic step. Re-run with the same seed to
    /// reproduce the output exactly.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Output file. Standard output when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a scale-free graph as a tab-separated edge list.
    Generate {
        #[arg(long)]
        nodes: usize,
        /// Power-law exponent of the in-degree distribution, within [2, 3]
        /// for the usual scale-free regime.
        #[arg(long, default_value_t = 2.5)]
        gamma: f64,
    },
    /// Compute an exact ranking.
    Rank {
        #[arg(value_enum)]
        method: Method,
        #[arg(long)]
        graph: PathBuf,
        /// Teleport probability; 0.15 is the customary complement of a 0.85
        /// damping factor.
        #[arg(long, default_value_t = 0.15, value_parser = unit_interval)]
        lambda: f64,
        /// Probability of jumping back to the root set each step.
        #[arg(long, default_value_t = 0.15, value_parser = unit_interval)]
        beta: f64,
        /// Root set, one node id per line.
        #[arg(long, required_if_eq("method", "priors"))]
        roots: Option<PathBuf>,
        /// Stop when the L1 change between iterations falls below this.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = 200)]
        max_iters: usize,
    },
    /// Approximate a ranking with a decaying particle swarm.
    Swarm {
        #[arg(long)]
        graph: PathBuf,
        /// Fraction of energy lost per step; matches the teleport probability
        /// of the PageRank being approximated.
        #[arg(long, default_value_t = 0.15, value_parser = unit_interval)]
        delta: f64,
        /// Probability of jumping back to the particle's home node each step.
        #[arg(long, default_value_t = 0.0, value_parser = unit_interval)]
        beta: f64,
        #[arg(long, value_enum, default_value_t = SeedingMode::Uniform)]
        seeding: SeedingMode,
        /// Particles per seeded node (per root with `--seeding roots`).
        #[arg(long, default_value_t = 1)]
        alpha: usize,
        /// Fraction of nodes seeded by `--seeding random`, in (0, 1].
        #[arg(long, default_value_t = 1.0, value_parser = proportion)]
        phi: f64,
        /// Root set for `--seeding roots`, one node id per line.
        #[arg(long, required_if_eq("seeding", "roots"))]
        roots: Option<PathBuf>,
        /// Propagation steps. Defaults to the PageRank iteration count at
        /// lambda = delta on the same graph.
        #[arg(long)]
        iters: Option<usize>,
        /// Energy below which a particle dies; 1e-8 lets a particle with
        /// delta = 0.15 make 113 deposits.
        #[arg(long, default_value_t = 1e-8)]
        theta: f64,
        #[arg(long, value_enum, default_value_t = ReadoutMode::Energy)]
        readout: ReadoutMode,
        /// Split particles across this many workers.
        #[arg(long)]
        parallel: Option<usize>,
    },
    /// Run a parameter sweep, the speedup benchmark or the iteration trend.
    Experiment {
        /// FIG1A, FIG1B, FIG2A, FIG2B, FIG3A, FIG3B, FIG4, SPEEDUP or TREND.
        #[arg(value_parser = Target::from_str)]
        id: Target,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 1000)]
        nodes: usize,
        #[arg(long, default_value_t = 2.5)]
        gamma: f64,
        /// Grid step for the unit-interval axes.
        #[arg(long)]
        step: Option<f64>,
        /// Run trials concurrently.
        #[arg(long)]
        parallel: bool,
        /// Record wall-clock time per row (breaks byte-exact replay).
        #[arg(long)]
        timing: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Method {
    Pagerank,
    Priors,
    Indegree,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum SeedingMode {
    /// `alpha` particles on every node.
    Uniform,
    /// `alpha` particles on every root.
    Roots,
    /// `alpha` particles on a random `phi` share of nodes.
    Random,
    /// `alpha` particles per out-edge of every node.
    Proportional,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ReadoutMode {
    /// Energy deposited over the whole run.
    Energy,
    /// Live particles per node after the last step.
    Occupancy,
}

#[derive(Clone, Copy, Debug)]
enum Target {
    Sweep(ExperimentId),
    Speedup,
    Trend,
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "SPEEDUP" => Ok(Target::Speedup),
            "TREND" => Ok(Target::Trend),
            _ => ExperimentId::from_str(s).map(Target::Sweep).map_err(|_| {
                let mut names: Vec<&str> = ExperimentId::ALL.iter().map(|id| id.name()).collect();
                names.extend(["SPEEDUP", "TREND"]);
                format!("unknown experiment {s:?}; expected one of {}", names.join(", "))
            }),
        }
    }
}

fn unit_interval(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{v} is outside [0, 1]"))
    }
}

fn proportion(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v <= 1.0 {
        Ok(v)
    } else {
        Err(format!("{v} is outside (0, 1]"))
    }
}

fn sink(out: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn read_graph_file(path: &Path) -> Result<DirectedGraph> {
    let graph = load_graph(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(graph.normalize_out_weights()?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let Format::Csv = cli.format;
    let out = cli.out.as_deref();
    match cli.command {
        Command::Generate { nodes, gamma } => {
            let graph = generate_scale_free(nodes, gamma, cli.seed)?;
            match out {
                Some(path) => save_graph(&graph, path).with_context(|| format!("writing {}", path.display()))?,
                None => write_graph(&graph, io::stdout().lock())?,
            }
            let max_in = graph.in_degrees().iter().copied().max().unwrap_or(0);
            eprintln!("seed={} nodes={nodes} gamma={gamma}", cli.seed);
            eprintln!(
                "|N|={} |E|={} max_in_degree={max_in}",
                graph.node_count(),
                graph.edge_count()
            );
        }
        Command::Rank {
            method,
            graph,
            lambda,
            beta,
            roots,
            tol,
            max_iters,
        } => {
            let graph = read_graph_file(&graph)?;
            let rank = match method {
                Method::Indegree => {
                    eprintln!("indegree: |E|={}", graph.edge_count());
                    indegree(&graph)
                }
                Method::Pagerank => {
                    let params = PageRankParams {
                        lambda,
                        tolerance: tol,
                        max_iterations: max_iters,
                    };
                    let (rank, report) = pagerank(&graph, &params)?;
                    eprintln!(
                        "pagerank lambda={lambda} tol={tol:e} max_iters={max_iters}: iterations={} final_delta={:e} converged={}",
                        report.iterations_used, report.final_delta, report.converged
                    );
                    rank
                }
                Method::Priors => {
                    let path = roots.expect("required by clap");
                    let roots =
                        load_roots(&path, graph.node_count()).with_context(|| format!("reading {}", path.display()))?;
                    let params = PriorsParams {
                        beta,
                        roots,
                        tolerance: tol,
                        max_iterations: max_iters,
                    };
                    let (rank, report) = pagerank_priors(&graph, &params)?;
                    eprintln!(
                        "priors beta={beta} roots={} tol={tol:e} max_iters={max_iters}: iterations={} final_delta={:e} converged={}",
                        params.roots.len(),
                        report.iterations_used,
                        report.final_delta,
                        report.converged
                    );
                    rank
                }
            };
            let mut w = sink(out)?;
            write_rank_csv(&rank, &mut w)?;
            w.flush()?;
        }
        Command::Swarm {
            graph,
            delta,
            beta,
            seeding,
            alpha,
            phi,
            roots,
            iters,
            theta,
            readout,
            parallel,
        } => {
            let graph = read_graph_file(&graph)?;
            let seeding = match seeding {
                SeedingMode::Uniform => Seeding::UniformPerNode { alpha },
                SeedingMode::Random => Seeding::RandomProportion { phi, alpha },
                SeedingMode::Proportional => Seeding::ProportionalOutDegree { alpha },
                SeedingMode::Roots => {
                    let path = roots.expect("required by clap");
                    let roots =
                        load_roots(&path, graph.node_count()).with_context(|| format!("reading {}", path.display()))?;
                    Seeding::RootSet { roots, per_root: alpha }
                }
            };
            let iterations = match iters {
                Some(t) => t,
                None => pagerank(&graph, &PageRankParams::with_lambda(delta))?.1.iterations_used,
            };
            let config = SwarmConfig {
                theta,
                readout: match readout {
                    ReadoutMode::Energy => Readout::Energy,
                    ReadoutMode::Occupancy => Readout::Occupancy,
                },
                mode: match parallel {
                    Some(workers) => ExecutionMode::Parallel { workers },
                    None => ExecutionMode::Sequential,
                },
                ..SwarmConfig::new(seeding, delta, beta, iterations, cli.seed)
            };
            eprintln!(
                "seed={} delta={delta} beta={beta} alpha={alpha} phi={phi} iters={iterations} theta={theta:e} readout={} parallel={parallel:?}",
                cli.seed,
                format!("{readout:?}").to_lowercase()
            );
            let (rank, stats) = swarm_rank(&graph, &config)?;
            let mut w = sink(out)?;
            write_rank_csv(&rank, &mut w)?;
            w.flush()?;
            eprintln!("{}", SwarmStats::CSV_HEADER);
            eprintln!("{}", stats.csv_row());
        }
        Command::Experiment {
            id,
            trials,
            nodes,
            gamma,
            step,
            parallel,
            timing,
        } => {
            eprintln!(
                "seed={} trials={trials} nodes={nodes} gamma={gamma} step={step:?}",
                cli.seed
            );
            let mut w = sink(out)?;
            match id {
                Target::Sweep(experiment) => {
                    let mut spec = SweepSpec::new(experiment, trials, cli.seed);
                    if let Some(step) = step {
                        spec = spec.with_unit_step(step);
                    }
                    spec.node_count = nodes;
                    spec.gamma = gamma;
                    spec.parallel = parallel;
                    spec.timing = timing;
                    let result = run_sweep(&spec)?;
                    result.write_csv(&mut w)?;
                    let failed = result.rows.iter().filter(|r| r.error.is_some()).count();
                    eprintln!(
                        "{experiment}: {} rows, {failed} without a correlation",
                        result.rows.len()
                    );
                }
                Target::Speedup => {
                    let mut spec = BenchmarkSpec::optimal(trials, cli.seed);
                    spec.node_count = nodes;
                    spec.gamma = gamma;
                    let report = benchmark_speedup(&spec)?;
                    report.write_csv(&mut w)?;
                    eprintln!(
                        "theoretical speedup {:.2} (nominal |E|=2575, t_PR=22.7), {:.2} (measured |E|={:.1}, t_PR={:.2}); measured time ratio {:.2}",
                        report.nominal_theoretical,
                        report.theoretical,
                        report.mean_edges,
                        report.mean_pagerank_iterations,
                        report.measured_ratio
                    );
                }
                Target::Trend => {
                    let mut spec = TrendSpec::new(vec![2.0, 2.25, 2.5, 2.75, 3.0], trials, cli.seed);
                    spec.node_count = nodes;
                    let rows = iteration_trend_check(&spec)?;
                    write_trend_csv(&rows, &mut w)?;
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}
