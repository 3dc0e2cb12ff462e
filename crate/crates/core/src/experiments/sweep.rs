//! Correlation sweeps behind the ranking comparisons.
//!
//! Every trial draws one fresh scale-free graph, shared by all grid points of
//! that trial. Seeds for graphs, root sets and swarms are derived from the
//! sweep seed, the trial index and the grid point, so a sweep replays exactly.
//!
//! Sweeps over `t_PS` run one swarm per seeding configuration and read the
//! field after each step. Because a swarm consumes its random stream in step
//! order, the snapshot after `k` steps is the same field a fresh run with
//! `iterations = k` would produce.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::seeds::derive_seed;
use super::stats::{pearson, summarize, Summary};
use crate::error::{Error, Result};
use crate::generate::generate_scale_free;
use crate::graph::{DirectedGraph, RootSet};
use crate::rank::RankVector;
use crate::reference::{indegree, pagerank, pagerank_priors, PageRankParams, PriorsParams};
use crate::swarm::{swarm_rank, Seeding, Swarm, SwarmConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ExperimentId {
    /// PageRank vs In-Degree over λ.
    #[serde(rename = "FIG1A")]
    Fig1a,
    /// Swarm vs In-Degree over δ and particles per node.
    #[serde(rename = "FIG1B")]
    Fig1b,
    /// Swarm vs PageRank over δ × λ with `t_PS = t_PR`.
    #[serde(rename = "FIG2A")]
    Fig2a,
    /// Swarm vs PageRank-Priors over β_PS × β_PRP.
    #[serde(rename = "FIG2B")]
    Fig2b,
    /// Swarm vs PageRank over constrained `t_PS`.
    #[serde(rename = "FIG3A")]
    Fig3a,
    /// Swarm vs PageRank over seeded proportion φ.
    #[serde(rename = "FIG3B")]
    Fig3b,
    /// Swarm vs PageRank over φ × `t_PS`.
    #[serde(rename = "FIG4")]
    Fig4,
}

impl ExperimentId {
    pub const ALL: [ExperimentId; 7] = [
        ExperimentId::Fig1a,
        ExperimentId::Fig1b,
        ExperimentId::Fig2a,
        ExperimentId::Fig2b,
        ExperimentId::Fig3a,
        ExperimentId::Fig3b,
        ExperimentId::Fig4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExperimentId::Fig1a => "FIG1A",
            ExperimentId::Fig1b => "FIG1B",
            ExperimentId::Fig2a => "FIG2A",
            ExperimentId::Fig2b => "FIG2B",
            ExperimentId::Fig3a => "FIG3A",
            ExperimentId::Fig3b => "FIG3B",
            ExperimentId::Fig4 => "FIG4",
        }
    }
}

impl fmt::Display for ExperimentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExperimentId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::param(format!("unknown experiment {s:?}")))
    }
}

/// `[0.005, step, 2·step, …, 0.995]`: the open unit interval sampled at
/// `step`, with the endpoints pulled in to 0.005 and 0.995.
pub fn unit_grid(step: f64) -> Vec<f64> {
    let mut grid = vec![0.005];
    let mut k = 1;
    loop {
        let v = ((k as f64 * step) * 1e9).round() / 1e9;
        if v >= 0.995 - 1e-12 {
            break;
        }
        if v > 0.005 {
            grid.push(v);
        }
        k += 1;
    }
    grid.push(0.995);
    grid
}

/// `[step, 2·step, …]` up to and including `max`.
pub fn step_grid(step: f64, max: f64) -> Vec<f64> {
    let count = (max / step + 1e-9).floor() as usize;
    (1..=count).map(|k| ((k as f64 * step) * 1e9).round() / 1e9).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub experiment: ExperimentId,
    pub trials: usize,
    pub node_count: usize,
    pub gamma: f64,
    pub rng_seed: u64,
    /// Dampening values for the reference PageRank.
    pub lambdas: Vec<f64>,
    /// Swarm decay values.
    pub deltas: Vec<f64>,
    /// Back-probabilities, shared by the swarm and PageRank-Priors axes.
    pub betas: Vec<f64>,
    /// Seeded proportions.
    pub phis: Vec<f64>,
    /// Particles per seeded node.
    pub alphas: Vec<usize>,
    /// Constrained iteration counts.
    pub t_ps: Vec<usize>,
    /// Share of nodes drawn into the root set for priors sweeps.
    pub root_proportion: f64,
    pub per_root: usize,
    pub parallel: bool,
    /// Record per-row wall-clock time. Off by default so output replays exactly.
    pub timing: bool,
}

impl SweepSpec {
    /// Default grids for `experiment` on γ = 2.5, |N| = 1000 graphs.
    pub fn new(experiment: ExperimentId, trials: usize, rng_seed: u64) -> Self {
        let mut spec = SweepSpec {
            experiment,
            trials,
            node_count: 1000,
            gamma: 2.5,
            rng_seed,
            lambdas: vec![0.15],
            deltas: vec![0.15],
            betas: Vec::new(),
            phis: Vec::new(),
            alphas: vec![1],
            t_ps: Vec::new(),
            root_proportion: 0.10,
            per_root: 10,
            parallel: false,
            timing: false,
        };
        match experiment {
            ExperimentId::Fig1a => spec.lambdas = unit_grid(0.01),
            ExperimentId::Fig1b => {
                spec.deltas = unit_grid(0.05);
                spec.alphas = (1..=20).collect();
            }
            ExperimentId::Fig2a => {
                spec.lambdas = unit_grid(0.05);
                spec.deltas = unit_grid(0.05);
                spec.alphas = vec![10];
            }
            ExperimentId::Fig2b => spec.betas = step_grid(0.1, 1.0),
            ExperimentId::Fig3a => spec.t_ps = (1..=25).collect(),
            ExperimentId::Fig3b => spec.phis = step_grid(0.01, 1.0),
            ExperimentId::Fig4 => {
                spec.phis = step_grid(0.01, 0.5);
                spec.t_ps = (1..=25).collect();
            }
        }
        spec
    }

    /// Resamples the continuous λ and δ axes at `step`.
    pub fn with_unit_step(mut self, step: f64) -> Self {
        match self.experiment {
            ExperimentId::Fig1a => self.lambdas = unit_grid(step),
            ExperimentId::Fig1b => self.deltas = unit_grid(step),
            ExperimentId::Fig2a => {
                self.lambdas = unit_grid(step);
                self.deltas = unit_grid(step);
            }
            _ => {}
        }
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::param("trials must be at least 1"));
        }
        let in_unit = |name: &str, values: &[f64], lo: f64, hi: f64| -> Result<()> {
            match values.iter().find(|v| !(lo..=hi).contains(*v)) {
                Some(v) => Err(Error::param(format!("{name} value {v} outside [{lo}, {hi}]"))),
                None => Ok(()),
            }
        };
        in_unit("lambda", &self.lambdas, 0.005, 0.995)?;
        in_unit("delta", &self.deltas, 0.005, 0.995)?;
        in_unit("beta", &self.betas, 0.0, 1.0)?;
        if let Some(phi) = self.phis.iter().find(|p| !(**p > 0.0 && **p <= 1.0)) {
            return Err(Error::param(format!("phi value {phi} outside (0, 1]")));
        }
        if self.alphas.contains(&0) || self.t_ps.contains(&0) || self.per_root == 0 {
            return Err(Error::param("particle counts and iteration counts must be positive"));
        }
        if !(self.root_proportion > 0.0 && self.root_proportion <= 1.0) {
            return Err(Error::param("root proportion must lie in (0, 1]"));
        }
        let needs = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::param(format!(
                    "{} needs a non-empty {what} grid",
                    self.experiment
                )))
            }
        };
        match self.experiment {
            ExperimentId::Fig1a => needs(!self.lambdas.is_empty(), "lambda"),
            ExperimentId::Fig1b => needs(!self.deltas.is_empty() && !self.alphas.is_empty(), "delta/alpha"),
            ExperimentId::Fig2a => needs(
                !self.lambdas.is_empty() && !self.deltas.is_empty() && !self.alphas.is_empty(),
                "lambda/delta/alpha",
            ),
            ExperimentId::Fig2b => needs(!self.betas.is_empty(), "beta"),
            ExperimentId::Fig3a => needs(!self.t_ps.is_empty() && !self.alphas.is_empty(), "t_ps/alpha"),
            ExperimentId::Fig3b => needs(!self.phis.is_empty() && !self.alphas.is_empty(), "phi/alpha"),
            ExperimentId::Fig4 => needs(
                !self.phis.is_empty() && !self.t_ps.is_empty() && !self.alphas.is_empty(),
                "phi/t_ps/alpha",
            ),
        }
    }

    /// Rows one trial produces.
    pub fn points_per_trial(&self) -> usize {
        match self.experiment {
            ExperimentId::Fig1a => self.lambdas.len(),
            ExperimentId::Fig1b => self.deltas.len() * self.alphas.len(),
            ExperimentId::Fig2a => self.lambdas.len() * self.deltas.len(),
            ExperimentId::Fig2b => self.betas.len() * self.betas.len(),
            ExperimentId::Fig3a => self.t_ps.len(),
            ExperimentId::Fig3b => self.phis.len(),
            ExperimentId::Fig4 => self.phis.len() * self.t_ps.len(),
        }
    }
}

/// One grid point of one trial. Columns that do not apply stay empty.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub experiment: ExperimentId,
    pub trial: usize,
    pub point: usize,
    pub lambda: Option<f64>,
    pub delta: Option<f64>,
    pub beta_ps: Option<f64>,
    pub beta_ref: Option<f64>,
    pub phi: Option<f64>,
    pub alpha: Option<usize>,
    pub t_ps: Option<usize>,
    pub ref_iterations: Option<usize>,
    pub pearson: Option<f64>,
    pub wall_ms: Option<f64>,
    pub error: Option<String>,
}

impl SweepRow {
    fn new(experiment: ExperimentId, trial: usize, point: usize) -> Self {
        SweepRow {
            experiment,
            trial,
            point,
            lambda: None,
            delta: None,
            beta_ps: None,
            beta_ref: None,
            phi: None,
            alpha: None,
            t_ps: None,
            ref_iterations: None,
            pearson: None,
            wall_ms: None,
            error: None,
        }
    }

    fn record<E: fmt::Display>(&mut self, outcome: std::result::Result<f64, E>) {
        match outcome {
            Ok(c) => self.pearson = Some(c),
            Err(e) => self.error = Some(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointSummary {
    /// First row of the point, carrying its parameter columns.
    pub params: SweepRow,
    pub pearson: Option<Summary>,
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult {
    pub experiment: ExperimentId,
    pub rows: Vec<SweepRow>,
}

impl ExperimentResult {
    /// Mean and standard error of the correlation per grid point.
    pub fn summary(&self) -> Vec<PointSummary> {
        let points = self.rows.iter().map(|r| r.point).max().map_or(0, |m| m + 1);
        let mut grouped: Vec<Vec<&SweepRow>> = vec![Vec::new(); points];
        for row in &self.rows {
            grouped[row.point].push(row);
        }
        grouped
            .into_iter()
            .filter(|rows| !rows.is_empty())
            .map(|rows| {
                let values: Vec<f64> = rows.iter().filter_map(|r| r.pearson).collect();
                let mut params = rows[0].clone();
                params.trial = 0;
                params.pearson = None;
                params.wall_ms = None;
                params.error = None;
                params.ref_iterations = None;
                PointSummary {
                    params,
                    pearson: summarize(&values),
                    errors: rows.iter().filter(|r| r.error.is_some()).count(),
                }
            })
            .collect()
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        for row in &self.rows {
            w.serialize(row)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Lowest-cost grid point (cost `φ · t_PS`) whose mean correlation reaches
/// `threshold`. Ties go to the earlier point.
pub fn cost_optimum(summary: &[PointSummary], threshold: f64) -> Option<&PointSummary> {
    summary
        .iter()
        .filter(|p| p.pearson.is_some_and(|s| s.mean >= threshold))
        .filter_map(|p| Some((p, p.params.phi? * p.params.t_ps? as f64)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .map(|(p, _)| p)
}

pub fn run_sweep(spec: &SweepSpec) -> Result<ExperimentResult> {
    spec.validate()?;
    let per_trial = |trial: usize| run_trial(spec, trial);
    let rows: Vec<Vec<SweepRow>> = if spec.parallel {
        (0..spec.trials).into_par_iter().map(per_trial).collect()
    } else {
        (0..spec.trials).map(per_trial).collect()
    };
    Ok(ExperimentResult {
        experiment: spec.experiment,
        rows: rows.into_iter().flatten().collect(),
    })
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

struct Trial<'a> {
    spec: &'a SweepSpec,
    index: usize,
    graph: DirectedGraph,
}

impl Trial<'_> {
    fn row(&self, point: usize) -> SweepRow {
        SweepRow::new(self.spec.experiment, self.index, point)
    }

    fn swarm_seed(&self, point: usize) -> u64 {
        derive_seed(self.spec.rng_seed, self.index as u64, 1 + point as u64)
    }

    fn timed<T>(&self, row: &mut SweepRow, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.spec.timing {
            row.wall_ms = Some(elapsed_ms(start));
        }
        out
    }

    fn pagerank(&self, lambda: f64) -> Result<(RankVector, usize)> {
        let (rank, report) = pagerank(&self.graph, &PageRankParams::with_lambda(lambda))?;
        Ok((rank, report.iterations_used))
    }

    fn swarm_vs(&self, reference: &RankVector, config: &SwarmConfig) -> Result<f64> {
        let (rank, _) = swarm_rank(&self.graph, config)?;
        pearson(reference, &rank)
    }

    /// One swarm stepped `max(t_values)` times, correlated after each step in `t_values`.
    fn trajectory(
        &self,
        reference: &RankVector,
        config: &SwarmConfig,
        t_values: &[usize],
    ) -> Vec<std::result::Result<f64, String>> {
        let mut swarm = match Swarm::from_config(&self.graph, config) {
            Ok(s) => s,
            Err(e) => return t_values.iter().map(|_| Err(e.to_string())).collect(),
        };
        let mut out = Vec::with_capacity(t_values.len());
        for &t in t_values {
            while swarm.iterations_run() < t && swarm.alive() > 0 {
                swarm.step();
            }
            let c = swarm.field().to_rank().and_then(|r| pearson(reference, &r));
            out.push(c.map_err(|e| e.to_string()));
        }
        out
    }
}

fn run_trial(spec: &SweepSpec, trial: usize) -> Vec<SweepRow> {
    let graph_seed = derive_seed(spec.rng_seed, trial as u64, 0);
    let graph = match generate_scale_free(spec.node_count, spec.gamma, graph_seed) {
        Ok(g) => g,
        Err(e) => {
            let mut row = SweepRow::new(spec.experiment, trial, 0);
            row.error = Some(e.to_string());
            return vec![row];
        }
    };
    let t = Trial {
        spec,
        index: trial,
        graph,
    };
    let failed = |mut row: SweepRow, e: &Error| {
        row.error = Some(e.to_string());
        row
    };

    match spec.experiment {
        ExperimentId::Fig1a => {
            let reference = indegree(&t.graph);
            spec.lambdas
                .iter()
                .enumerate()
                .map(|(point, &lambda)| {
                    let mut row = t.row(point);
                    row.lambda = Some(lambda);
                    let out = t.timed(&mut row, || t.pagerank(lambda));
                    match out {
                        Ok((rank, iters)) => {
                            row.ref_iterations = Some(iters);
                            row.record(pearson(&reference, &rank));
                        }
                        Err(e) => row = failed(row, &e),
                    }
                    row
                })
                .collect()
        }
        ExperimentId::Fig1b => {
            let reference = indegree(&t.graph);
            let mut rows = Vec::new();
            for (ai, &alpha) in spec.alphas.iter().enumerate() {
                for (di, &delta) in spec.deltas.iter().enumerate() {
                    let point = ai * spec.deltas.len() + di;
                    let mut row = t.row(point);
                    row.delta = Some(delta);
                    row.alpha = Some(alpha);
                    row.beta_ps = Some(0.0);
                    match t.pagerank(delta) {
                        Ok((_, iters)) => {
                            row.ref_iterations = Some(iters);
                            row.t_ps = Some(iters);
                            let config = SwarmConfig::new(
                                Seeding::UniformPerNode { alpha },
                                delta,
                                0.0,
                                iters,
                                t.swarm_seed(point),
                            );
                            let out = t.timed(&mut row, || t.swarm_vs(&reference, &config));
                            row.record(out);
                        }
                        Err(e) => row = failed(row, &e),
                    }
                    rows.push(row);
                }
            }
            rows
        }
        ExperimentId::Fig2a => {
            let alpha = spec.alphas[0];
            let mut rows = Vec::new();
            for (li, &lambda) in spec.lambdas.iter().enumerate() {
                let reference = t.pagerank(lambda);
                for (di, &delta) in spec.deltas.iter().enumerate() {
                    let point = li * spec.deltas.len() + di;
                    let mut row = t.row(point);
                    row.lambda = Some(lambda);
                    row.delta = Some(delta);
                    row.alpha = Some(alpha);
                    row.beta_ps = Some(0.0);
                    match &reference {
                        Ok((rank, iters)) => {
                            row.ref_iterations = Some(*iters);
                            row.t_ps = Some(*iters);
                            let config = SwarmConfig::new(
                                Seeding::UniformPerNode { alpha },
                                delta,
                                0.0,
                                *iters,
                                t.swarm_seed(point),
                            );
                            let out = t.timed(&mut row, || t.swarm_vs(rank, &config));
                            row.record(out);
                        }
                        Err(e) => row = failed(row, e),
                    }
                    rows.push(row);
                }
            }
            rows
        }
        ExperimentId::Fig2b => {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(spec.rng_seed, trial as u64, u64::MAX));
            let roots = match RootSet::random(t.graph.node_count(), spec.root_proportion, &mut rng) {
                Ok(r) => r,
                Err(e) => return vec![failed(t.row(0), &e)],
            };
            let mut rows = Vec::new();
            for (ri, &beta_ref) in spec.betas.iter().enumerate() {
                let reference = pagerank_priors(&t.graph, &PriorsParams::new(beta_ref, roots.clone()));
                for (pi, &beta_ps) in spec.betas.iter().enumerate() {
                    let point = ri * spec.betas.len() + pi;
                    let mut row = t.row(point);
                    row.beta_ref = Some(beta_ref);
                    row.beta_ps = Some(beta_ps);
                    row.delta = Some(0.0);
                    row.phi = Some(spec.root_proportion);
                    row.alpha = Some(spec.per_root);
                    match &reference {
                        Ok((rank, report)) => {
                            row.ref_iterations = Some(report.iterations_used);
                            row.t_ps = Some(report.iterations_used);
                            let config = SwarmConfig::new(
                                Seeding::RootSet {
                                    roots: roots.clone(),
                                    per_root: spec.per_root,
                                },
                                0.0,
                                beta_ps,
                                report.iterations_used,
                                t.swarm_seed(point),
                            );
                            let out = t.timed(&mut row, || t.swarm_vs(rank, &config));
                            row.record(out);
                        }
                        Err(e) => row = failed(row, e),
                    }
                    rows.push(row);
                }
            }
            rows
        }
        ExperimentId::Fig3a => {
            let (lambda, delta, alpha) = (spec.lambdas[0], spec.deltas[0], spec.alphas[0]);
            let reference = match t.pagerank(lambda) {
                Ok(r) => r,
                Err(e) => return vec![failed(t.row(0), &e)],
            };
            let config = SwarmConfig::new(
                Seeding::UniformPerNode { alpha },
                delta,
                0.0,
                spec.t_ps.iter().copied().max().unwrap_or(1),
                t.swarm_seed(0),
            );
            let start = Instant::now();
            let outcomes = t.trajectory(&reference.0, &config, &spec.t_ps);
            let wall = spec.timing.then(|| elapsed_ms(start));
            spec.t_ps
                .iter()
                .zip(outcomes)
                .enumerate()
                .map(|(point, (&t_ps, outcome))| {
                    let mut row = t.row(point);
                    row.lambda = Some(lambda);
                    row.delta = Some(delta);
                    row.beta_ps = Some(0.0);
                    row.phi = Some(1.0);
                    row.alpha = Some(alpha);
                    row.t_ps = Some(t_ps);
                    row.ref_iterations = Some(reference.1);
                    row.wall_ms = wall;
                    row.record(outcome);
                    row
                })
                .collect()
        }
        ExperimentId::Fig3b => {
            let (lambda, delta, alpha) = (spec.lambdas[0], spec.deltas[0], spec.alphas[0]);
            let reference = match t.pagerank(lambda) {
                Ok(r) => r,
                Err(e) => return vec![failed(t.row(0), &e)],
            };
            spec.phis
                .iter()
                .enumerate()
                .map(|(point, &phi)| {
                    let mut row = t.row(point);
                    row.lambda = Some(lambda);
                    row.delta = Some(delta);
                    row.beta_ps = Some(0.0);
                    row.phi = Some(phi);
                    row.alpha = Some(alpha);
                    row.t_ps = Some(reference.1);
                    row.ref_iterations = Some(reference.1);
                    let config = SwarmConfig::new(
                        Seeding::RandomProportion { phi, alpha },
                        delta,
                        0.0,
                        reference.1,
                        t.swarm_seed(point),
                    );
                    let out = t.timed(&mut row, || t.swarm_vs(&reference.0, &config));
                    row.record(out);
                    row
                })
                .collect()
        }
        ExperimentId::Fig4 => {
            let (lambda, delta, alpha) = (spec.lambdas[0], spec.deltas[0], spec.alphas[0]);
            let reference = match t.pagerank(lambda) {
                Ok(r) => r,
                Err(e) => return vec![failed(t.row(0), &e)],
            };
            let max_t = spec.t_ps.iter().copied().max().unwrap_or(1);
            let mut rows = Vec::new();
            for (fi, &phi) in spec.phis.iter().enumerate() {
                let config = SwarmConfig::new(
                    Seeding::RandomProportion { phi, alpha },
                    delta,
                    0.0,
                    max_t,
                    t.swarm_seed(fi),
                );
                let start = Instant::now();
                let outcomes = t.trajectory(&reference.0, &config, &spec.t_ps);
                let wall = spec.timing.then(|| elapsed_ms(start));
                for (ti, (&t_ps, outcome)) in spec.t_ps.iter().zip(outcomes).enumerate() {
                    let mut row = t.row(fi * spec.t_ps.len() + ti);
                    row.lambda = Some(lambda);
                    row.delta = Some(delta);
                    row.beta_ps = Some(0.0);
                    row.phi = Some(phi);
                    row.alpha = Some(alpha);
                    row.t_ps = Some(t_ps);
                    row.ref_iterations = Some(reference.1);
                    row.wall_ms = wall;
                    row.record(outcome);
                    rows.push(row);
                }
            }
            rows
        }
    }
}
