//! Scale-free directed graphs with a predetermined in-degree per node.
//!
//! Every node first draws an in-capacity `⌊ψ^(−1/(γ−1))⌋` with `ψ` uniform in
//! `(0, 1]`, capped at `node_count − 1`. Random `(source, target)` pairs are
//! then wired until every capacity is met. A proposal fails on a self-loop or
//! an existing edge; targets that are already full are never proposed, which
//! yields the same edge sequence distribution as proposing them and
//! rejecting. Generation stops early once `50 · node_count²` proposals have
//! failed.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::DirectedGraph;

/// Failed proposals allowed per squared node count.
pub const RETRY_BUDGET_FACTOR: u64 = 50;

/// In-capacity drawn for a given `psi`.
pub fn in_capacity(psi: f64, gamma: f64, node_count: usize) -> usize {
    let cap = node_count.saturating_sub(1);
    let raw = psi.powf(-1.0 / (gamma - 1.0)).floor();
    if raw.is_finite() && raw < cap as f64 {
        raw as usize
    } else {
        cap
    }
}

fn validate(node_count: usize, gamma: f64) -> Result<()> {
    if node_count < 2 {
        return Err(Error::param(format!("node_count must be at least 2, got {node_count}")));
    }
    if !(gamma.is_finite() && gamma > 1.0) {
        return Err(Error::param(format!("gamma must be finite and > 1, got {gamma}")));
    }
    Ok(())
}

/// Draws the in-capacity of every node.
pub fn draw_capacities<R: Rng + ?Sized>(node_count: usize, gamma: f64, rng: &mut R) -> Vec<usize> {
    (0..node_count)
        .map(|_| {
            let psi = 1.0 - rng.random::<f64>();
            in_capacity(psi, gamma, node_count)
        })
        .collect()
}

/// Generates a scale-free graph with out-weights normalized.
pub fn generate_scale_free(node_count: usize, gamma: f64, rng_seed: u64) -> Result<DirectedGraph> {
    Ok(generate_with_capacities(node_count, gamma, rng_seed)?.0)
}

/// Like [`generate_scale_free`], also returning the drawn in-capacities.
pub fn generate_with_capacities(node_count: usize, gamma: f64, rng_seed: u64) -> Result<(DirectedGraph, Vec<usize>)> {
    validate(node_count, gamma)?;
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let capacities = draw_capacities(node_count, gamma, &mut rng);

    let mut residual = capacities.clone();
    let mut open: Vec<usize> = (0..node_count).filter(|&k| residual[k] > 0).collect();
    let mut position = vec![usize::MAX; node_count];
    for (i, &k) in open.iter().enumerate() {
        position[k] = i;
    }

    let budget = RETRY_BUDGET_FACTOR * (node_count as u64).pow(2);
    let mut failures = 0u64;
    let mut present: HashSet<(usize, usize)> = HashSet::new();
    let mut edges = Vec::new();

    while !open.is_empty() && failures < budget {
        let target = open[rng.random_range(0..open.len())];
        let source = rng.random_range(0..node_count);
        if source == target || present.contains(&(source, target)) {
            failures += 1;
            continue;
        }
        present.insert((source, target));
        edges.push((source, target, 1.0));
        residual[target] -= 1;
        if residual[target] == 0 {
            let slot = position[target];
            open.swap_remove(slot);
            if slot < open.len() {
                position[open[slot]] = slot;
            }
        }
    }

    let graph = DirectedGraph::from_edges(node_count, edges)?.normalize_out_weights()?;
    Ok((graph, capacities))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn capacity_at_psi_one_is_one() {
        assert_eq!(in_capacity(1.0, 2.5, 1000), 1);
    }

    #[test]
    fn capacity_is_capped_near_zero() {
        assert_eq!(in_capacity(1e-300, 2.5, 1000), 999);
        assert_eq!(in_capacity(f64::MIN_POSITIVE, 2.0, 10), 9);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate_scale_free(1, 2.5, 0).is_err());
        assert!(generate_scale_free(10, 1.0, 0).is_err());
        assert!(generate_scale_free(10, f64::NAN, 0).is_err());
    }

    #[test]
    fn two_nodes_have_at_most_two_edges() {
        for seed in 0..20 {
            let g = generate_scale_free(2, 2.5, seed).unwrap();
            assert!(g.edge_count() <= 2);
        }
    }

    #[test]
    fn fills_every_capacity_on_small_graphs() {
        let (g, caps) = generate_with_capacities(50, 2.5, 11).unwrap();
        assert_eq!(g.in_degrees(), caps.as_slice());
        assert!(g.is_normalized());
    }

    #[test]
    fn capacity_tail_tracks_power_law() {
        let gamma = 2.5;
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let draws = 200_000;
        let caps = draw_capacities(draws, gamma, &mut rng);
        for c in 2..=50usize {
            let observed = caps.iter().filter(|&&k| k >= c).count() as f64 / draws as f64;
            let expected = (c as f64).powf(1.0 - gamma);
            let ratio = observed / expected;
            assert!(
                (0.5..=2.0).contains(&ratio),
                "c={c} observed={observed} expected={expected}"
            );
        }
    }
}
