//! Smallest constrained iteration count reaching a target correlation, per γ.

use serde::Serialize;

use super::seeds::derive_seed;
use super::stats::pearson;
use crate::error::{Error, Result};
use crate::generate::generate_scale_free;
use crate::reference::{pagerank, PageRankParams};
use crate::swarm::{Seeding, Swarm, SwarmConfig};

#[derive(Debug, Clone, PartialEq)]
pub struct TrendSpec {
    pub gammas: Vec<f64>,
    pub node_count: usize,
    pub trials: usize,
    pub rng_seed: u64,
    pub lambda: f64,
    pub alpha: usize,
    pub max_t_ps: usize,
    pub target: f64,
}

impl TrendSpec {
    pub fn new(gammas: Vec<f64>, trials: usize, rng_seed: u64) -> Self {
        TrendSpec {
            gammas,
            node_count: 1000,
            trials,
            rng_seed,
            lambda: 0.15,
            alpha: 1,
            max_t_ps: 25,
            target: 0.95,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrendRow {
    pub gamma: f64,
    pub mean_edges: f64,
    pub mean_pagerank_iterations: f64,
    /// Smallest `t_PS` whose mean correlation reaches the target.
    pub min_t_ps: Option<usize>,
    pub pearson_at_min: Option<f64>,
    /// `min_t_ps / mean_pagerank_iterations`.
    pub ratio: Option<f64>,
}

/// For each γ, runs fully seeded swarms with `δ = λ` and records the mean
/// correlation with PageRank after every step up to `max_t_ps`.
pub fn iteration_trend_check(spec: &TrendSpec) -> Result<Vec<TrendRow>> {
    if spec.trials == 0 || spec.max_t_ps == 0 {
        return Err(Error::param("trend check needs trials and iterations"));
    }
    if let Some(g) = spec.gammas.iter().find(|g| !(2.0..=3.0).contains(*g)) {
        return Err(Error::param(format!("gamma {g} outside [2, 3]")));
    }
    let mut rows = Vec::with_capacity(spec.gammas.len());
    for (gi, &gamma) in spec.gammas.iter().enumerate() {
        let mut curve = vec![0.0; spec.max_t_ps];
        let (mut edges, mut iterations) = (0.0, 0.0);
        for trial in 0..spec.trials {
            let tag = (gi * spec.trials + trial) as u64;
            let graph = generate_scale_free(spec.node_count, gamma, derive_seed(spec.rng_seed, tag, 0))?;
            let (reference, report) = pagerank(&graph, &PageRankParams::with_lambda(spec.lambda))?;
            edges += graph.edge_count() as f64;
            iterations += report.iterations_used as f64;
            let config = SwarmConfig::new(
                Seeding::UniformPerNode { alpha: spec.alpha },
                spec.lambda,
                0.0,
                spec.max_t_ps,
                derive_seed(spec.rng_seed, tag, 1),
            );
            let mut swarm = Swarm::from_config(&graph, &config)?;
            for slot in curve.iter_mut() {
                if swarm.alive() > 0 {
                    swarm.step();
                }
                // One particle per node makes the first step a constant field.
                *slot += swarm
                    .field()
                    .to_rank()
                    .and_then(|r| pearson(&reference, &r))
                    .unwrap_or(0.0);
            }
        }
        let n = spec.trials as f64;
        let mean_pagerank_iterations = iterations / n;
        let hit = curve.iter().map(|c| c / n).enumerate().find(|(_, c)| *c >= spec.target);
        rows.push(TrendRow {
            gamma,
            mean_edges: edges / n,
            mean_pagerank_iterations,
            min_t_ps: hit.map(|(i, _)| i + 1),
            pearson_at_min: hit.map(|(_, c)| c),
            ratio: hit.map(|(i, _)| (i + 1) as f64 / mean_pagerank_iterations),
        });
    }
    Ok(rows)
}

pub fn write_trend_csv<W: std::io::Write>(rows: &[TrendRow], writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
