//! Cost model and wall-clock comparison of PageRank against the swarm.

use std::time::Instant;

use serde::Serialize;

use super::seeds::derive_seed;
use super::stats::pearson;
use crate::error::{Error, Result};
use crate::generate::generate_scale_free;
use crate::reference::{pagerank, PageRankParams};
use crate::swarm::{swarm_rank, Seeding, SwarmConfig};

/// Node count of desk-scale graphs.
pub const NOMINAL_NODE_COUNT: f64 = 1000.0;
/// Edge count of a typical γ = 2.5, |N| = 1000 generated graph.
pub const NOMINAL_EDGE_COUNT: f64 = 2575.0;
/// Mean PageRank iterations to convergence on those graphs at λ = 0.15.
pub const NOMINAL_PAGERANK_ITERATIONS: f64 = 22.7;

/// `Φ = |E|·t_PR / (φ|N|α + φ|N|α·t_PS)`: PageRank edge visits per swarm
/// particle step, seeding included.
pub fn theoretical_speedup(
    edge_count: f64,
    t_pr: f64,
    phi: f64,
    node_count: f64,
    alpha: f64,
    t_ps: f64,
) -> Result<f64> {
    let inputs = [edge_count, t_pr, phi, node_count, alpha, t_ps];
    if inputs.iter().any(|v| !v.is_finite() || *v < 0.0) {
        return Err(Error::param(format!(
            "speedup inputs must be finite and non-negative: {inputs:?}"
        )));
    }
    let population = phi * node_count * alpha;
    let denominator = population + population * t_ps;
    if denominator == 0.0 {
        return Err(Error::param("speedup denominator is zero"));
    }
    Ok(edge_count * t_pr / denominator)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkSpec {
    pub node_count: usize,
    pub gamma: f64,
    pub trials: usize,
    pub rng_seed: u64,
    pub lambda: f64,
    pub delta: f64,
    pub phi: f64,
    pub alpha: usize,
    pub t_ps: usize,
    /// Timed runs per method per trial; the fastest is kept.
    pub repetitions: usize,
}

impl BenchmarkSpec {
    /// The cheapest swarm configuration reaching C ≈ 0.95 on desk-scale graphs.
    pub fn optimal(trials: usize, rng_seed: u64) -> Self {
        BenchmarkSpec {
            node_count: 1000,
            gamma: 2.5,
            trials,
            rng_seed,
            lambda: 0.15,
            delta: 0.15,
            phi: 0.45,
            alpha: 1,
            t_ps: 8,
            repetitions: 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchmarkTrial {
    pub trial: usize,
    pub edges: usize,
    pub pagerank_iterations: usize,
    pub pagerank_secs: f64,
    pub swarm_secs: f64,
    pub ratio: f64,
    pub pearson: f64,
    pub theoretical: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpeedupReport {
    pub spec: BenchmarkSpec,
    pub trials: Vec<BenchmarkTrial>,
    pub mean_edges: f64,
    pub mean_pagerank_iterations: f64,
    /// Φ evaluated at the measured mean |E| and t_PR.
    pub theoretical: f64,
    /// Φ evaluated at [`NOMINAL_EDGE_COUNT`], [`NOMINAL_PAGERANK_ITERATIONS`]
    /// and [`NOMINAL_NODE_COUNT`].
    pub nominal_theoretical: f64,
    /// Mean PageRank time over mean swarm time.
    pub measured_ratio: f64,
}

impl SpeedupReport {
    pub fn write_csv<W: std::io::Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        for t in &self.trials {
            w.serialize(t)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn fastest<T>(repetitions: usize, mut f: impl FnMut() -> T) -> (T, f64) {
    let mut best = f64::INFINITY;
    let mut out = None;
    for _ in 0..repetitions.max(1) {
        let start = Instant::now();
        let value = f();
        best = best.min(start.elapsed().as_secs_f64());
        out = Some(value);
    }
    (out.expect("at least one repetition"), best)
}

/// Times PageRank to convergence against the swarm on fresh graphs. Graph
/// generation is not timed.
pub fn benchmark_speedup(spec: &BenchmarkSpec) -> Result<SpeedupReport> {
    if spec.trials == 0 {
        return Err(Error::param("benchmark needs at least one trial"));
    }
    let mut trials = Vec::with_capacity(spec.trials);
    for trial in 0..spec.trials {
        let graph = generate_scale_free(spec.node_count, spec.gamma, derive_seed(spec.rng_seed, trial as u64, 0))?;
        let params = PageRankParams::with_lambda(spec.lambda);
        let (reference, pagerank_secs) = fastest(spec.repetitions, || pagerank(&graph, &params));
        let (reference, report) = reference?;
        let config = SwarmConfig::new(
            Seeding::RandomProportion {
                phi: spec.phi,
                alpha: spec.alpha,
            },
            spec.delta,
            0.0,
            spec.t_ps,
            derive_seed(spec.rng_seed, trial as u64, 1),
        );
        let (swarm, swarm_secs) = fastest(spec.repetitions, || swarm_rank(&graph, &config));
        let (swarm, _) = swarm?;
        trials.push(BenchmarkTrial {
            trial,
            edges: graph.edge_count(),
            pagerank_iterations: report.iterations_used,
            pagerank_secs,
            swarm_secs,
            ratio: pagerank_secs / swarm_secs,
            pearson: pearson(&reference, &swarm)?,
            theoretical: theoretical_speedup(
                graph.edge_count() as f64,
                report.iterations_used as f64,
                spec.phi,
                spec.node_count as f64,
                spec.alpha as f64,
                spec.t_ps as f64,
            )?,
        });
    }
    let n = trials.len() as f64;
    let mean = |f: fn(&BenchmarkTrial) -> f64| trials.iter().map(f).sum::<f64>() / n;
    let mean_edges = mean(|t| t.edges as f64);
    let mean_pagerank_iterations = mean(|t| t.pagerank_iterations as f64);
    let measured_ratio = mean(|t| t.pagerank_secs) / mean(|t| t.swarm_secs);
    let cost =
        |edges, iters, nodes| theoretical_speedup(edges, iters, spec.phi, nodes, spec.alpha as f64, spec.t_ps as f64);
    Ok(SpeedupReport {
        theoretical: cost(mean_edges, mean_pagerank_iterations, spec.node_count as f64)?,
        nominal_theoretical: cost(NOMINAL_EDGE_COUNT, NOMINAL_PAGERANK_ITERATIONS, NOMINAL_NODE_COUNT)?,
        spec: spec.clone(),
        trials,
        mean_edges,
        mean_pagerank_iterations,
        measured_ratio,
    })
}
