//! Exact iterative rankings used as ground truth for the swarm.
//!
//! Both PageRank variants share one power iteration:
//!
//! ```text
//! I_k ← (1 − m) · Σ_{j→k} w_jk · I_j  +  (m + (1 − m) · D) · t_k
//! ```
//!
//! where `m` is the teleport mass (λ or β), `t` the teleport distribution
//! (uniform for PageRank, the root prior for PageRank-Priors) and `D` the
//! total score currently held by dangling nodes. Iteration stops once the L1
//! distance between successive vectors drops below the tolerance.

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, RootSet};
use crate::rank::RankVector;

pub const DEFAULT_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_MAX_ITERATIONS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PageRankParams {
    /// Teleport (dampening) mass λ. `0.15` corresponds to the usual `d = 0.85`.
    pub lambda: f64,
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for PageRankParams {
    fn default() -> Self {
        PageRankParams {
            lambda: 0.15,
            tolerance: DEFAULT_TOLERANCE,
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }
}

impl PageRankParams {
    pub fn with_lambda(lambda: f64) -> Self {
        PageRankParams {
            lambda,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PriorsParams {
    /// Probability β of jumping back to the root set at each step.
    pub beta: f64,
    pub roots: RootSet,
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl PriorsParams {
    pub fn new(beta: f64, roots: RootSet) -> Self {
        PriorsParams {
            beta,
            roots,
            tolerance: DEFAULT_TOLERANCE,
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceReport {
    pub iterations_used: usize,
    pub final_delta: f64,
    pub converged: bool,
}

fn check_common(graph: &DirectedGraph, mass: f64, name: &str, tolerance: f64, max_iterations: usize) -> Result<()> {
    if !(0.0..=1.0).contains(&mass) {
        return Err(Error::param(format!("{name} must lie in [0, 1], got {mass}")));
    }
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(Error::param(format!("tolerance must be positive, got {tolerance}")));
    }
    if max_iterations == 0 {
        return Err(Error::param("max_iterations must be at least 1"));
    }
    if graph.node_count() == 0 {
        return Err(Error::param("graph has no nodes"));
    }
    graph.require_normalized()
}

pub fn pagerank(graph: &DirectedGraph, params: &PageRankParams) -> Result<(RankVector, ConvergenceReport)> {
    check_common(graph, params.lambda, "lambda", params.tolerance, params.max_iterations)?;
    let n = graph.node_count();
    let uniform = vec![1.0 / n as f64; n];
    Ok(power_iterate(
        graph,
        params.lambda,
        &uniform,
        uniform.clone(),
        params.tolerance,
        params.max_iterations,
    ))
}

pub fn pagerank_priors(graph: &DirectedGraph, params: &PriorsParams) -> Result<(RankVector, ConvergenceReport)> {
    check_common(graph, params.beta, "beta", params.tolerance, params.max_iterations)?;
    if params.roots.is_empty() {
        return Err(Error::param("root set is empty"));
    }
    if let Some(r) = params.roots.members().iter().find(|r| r.index() >= graph.node_count()) {
        return Err(Error::param(format!("root {r} outside graph")));
    }
    let prior = params.roots.prior(graph.node_count());
    Ok(power_iterate(
        graph,
        params.beta,
        &prior,
        prior.clone(),
        params.tolerance,
        params.max_iterations,
    ))
}

fn power_iterate(
    graph: &DirectedGraph,
    teleport_mass: f64,
    teleport: &[f64],
    initial: Vec<f64>,
    tolerance: f64,
    max_iterations: usize,
) -> (RankVector, ConvergenceReport) {
    let follow = 1.0 - teleport_mass;
    let mut current = initial;
    let mut next = vec![0.0; current.len()];
    let mut report = ConvergenceReport {
        iterations_used: 0,
        final_delta: f64::INFINITY,
        converged: false,
    };

    while report.iterations_used < max_iterations {
        let dangling: f64 = graph
            .nodes()
            .filter(|&k| graph.is_dangling(k))
            .map(|k| current[k.index()])
            .sum();
        let jump = teleport_mass + follow * dangling;
        for (slot, &t) in next.iter_mut().zip(teleport) {
            *slot = jump * t;
        }
        for j in graph.nodes() {
            let share = follow * current[j.index()];
            if share == 0.0 {
                continue;
            }
            let (targets, weights) = graph.out_edges(j);
            for (t, w) in targets.iter().zip(weights) {
                next[t.index()] += share * w;
            }
        }
        let delta: f64 = current.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut current, &mut next);
        report.iterations_used += 1;
        report.final_delta = delta;
        if delta < tolerance {
            report.converged = true;
            break;
        }
    }

    // Rounding drift only; the iteration itself preserves mass.
    let total: f64 = current.iter().sum();
    for s in &mut current {
        *s /= total;
    }
    (RankVector::normalized_unchecked(current), report)
}

/// In-degree share of every node. An edgeless graph ranks all nodes equally.
pub fn indegree(graph: &DirectedGraph) -> RankVector {
    let edges = graph.edge_count();
    if edges == 0 {
        return RankVector::uniform(graph.node_count());
    }
    let scores = graph.in_degrees().iter().map(|&d| d as f64 / edges as f64).collect();
    RankVector::normalized_unchecked(scores)
}
