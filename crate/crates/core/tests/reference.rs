mod common;

use proptest::prelude::*;
use swarmrank::experiments::pearson;
use swarmrank::{
    generate_scale_free, indegree, pagerank, pagerank_priors, DirectedGraph, NodeId, PageRankParams, PriorsParams,
    RootSet,
};

fn tight(lambda: f64) -> PageRankParams {
    PageRankParams {
        tolerance: 1e-14,
        max_iterations: 10_000,
        ..PageRankParams::with_lambda(lambda)
    }
}

#[test]
fn chain_pagerank_matches_linear_solve() {
    let chain = common::graph(3, &[(0, 1, 1.0), (1, 2, 1.0)]);
    let (r, report) = pagerank(&chain, &tight(0.15)).unwrap();
    assert!(report.converged);
    let oracle = common::pagerank_oracle(&chain, 0.15);
    assert!(
        common::max_abs_diff(r.scores(), &oracle) < 1e-9,
        "{:?} vs {oracle:?}",
        r.scores()
    );
    // rank accumulates down the chain
    assert!(r[0] < r[1] && r[1] < r[2]);
}

#[test]
fn chain_priors_matches_linear_solve() {
    let chain = common::graph(3, &[(0, 1, 1.0), (1, 2, 1.0)]);
    let roots = RootSet::new(3, [NodeId(0)]).unwrap();
    let params = PriorsParams {
        tolerance: 1e-14,
        max_iterations: 10_000,
        ..PriorsParams::new(0.5, roots.clone())
    };
    let (r, _) = pagerank_priors(&chain, &params).unwrap();
    let oracle = common::priors_oracle(&chain, &roots, 0.5);
    assert!(common::max_abs_diff(r.scores(), &oracle) < 1e-9);
}

#[test]
fn small_graphs_match_linear_solve() {
    for g in common::small_graphs() {
        for lambda in [0.05, 0.15, 0.5, 0.95] {
            let (r, _) = pagerank(&g, &tight(lambda)).unwrap();
            assert!(common::max_abs_diff(r.scores(), &common::pagerank_oracle(&g, lambda)) < 1e-9);
        }
    }
}

#[test]
fn indegree_matches_brute_tally() {
    let g = generate_scale_free(300, 2.5, 4).unwrap();
    let mut tally = vec![0usize; 300];
    for e in g.edges() {
        tally[e.target.index()] += 1;
    }
    let total = g.edge_count() as f64;
    let r = indegree(&g);
    for (k, count) in tally.iter().enumerate() {
        assert!((r[k] - *count as f64 / total).abs() < 1e-15);
    }
}

#[test]
fn pagerank_approaches_indegree_as_teleport_vanishes() {
    let graphs: Vec<DirectedGraph> = (0..5)
        .map(|s| generate_scale_free(1000, 2.5, 100 + s).unwrap())
        .collect();
    let curve: Vec<f64> = [0.15, 0.5, 0.85, 0.995]
        .iter()
        .map(|&lambda| {
            graphs
                .iter()
                .map(|g| {
                    pearson(
                        &pagerank(g, &PageRankParams::with_lambda(lambda)).unwrap().0,
                        indegree(g),
                    )
                    .unwrap()
                })
                .sum::<f64>()
                / graphs.len() as f64
        })
        .collect();
    assert!(curve.windows(2).all(|w| w[1] >= w[0] - 0.005), "{curve:?}");
    assert!(curve[3] > 0.95, "{curve:?}");
}

#[test]
fn all_roots_without_teleport_is_plain_power_iteration() {
    // Strongly connected, aperiodic, no dangling nodes.
    let g = common::graph(
        4,
        &[
            (0, 1, 0.5),
            (0, 2, 0.5),
            (1, 2, 1.0),
            (2, 0, 0.5),
            (2, 3, 0.5),
            (3, 0, 1.0),
        ],
    );
    let params = PriorsParams {
        tolerance: 1e-13,
        max_iterations: 100_000,
        ..PriorsParams::new(0.0, RootSet::all(4).unwrap())
    };
    let (priors, _) = pagerank_priors(&g, &params).unwrap();
    let mut x = vec![0.25; 4];
    for _ in 0..100_000 {
        let mut next = vec![0.0; 4];
        for e in g.edges() {
            next[e.target.index()] += x[e.source.index()] * e.weight;
        }
        x = next;
    }
    assert!(common::max_abs_diff(priors.scores(), &x) < 1e-9);
}

#[test]
fn pagerank_is_invariant_to_weight_scale_before_normalization() {
    let raw = |scale: f64| {
        DirectedGraph::from_edges(
            4,
            [(0, 1, 2.0 * scale), (0, 2, scale), (1, 3, scale), (3, 0, 5.0 * scale)],
        )
        .unwrap()
        .normalize_out_weights()
        .unwrap()
    };
    let a = pagerank(&raw(1.0), &PageRankParams::default()).unwrap().0;
    let b = pagerank(&raw(7.5), &PageRankParams::default()).unwrap().0;
    assert!(common::max_abs_diff(a.scores(), b.scores()) < 1e-12);
}

#[test]
fn mean_iterations_on_generated_graphs_are_moderate() {
    let mean = (0..10)
        .map(|s| {
            let g = generate_scale_free(1000, 2.5, 500 + s).unwrap();
            pagerank(&g, &PageRankParams::default()).unwrap().1.iterations_used as f64
        })
        .sum::<f64>()
        / 10.0;
    assert!((15.0..=60.0).contains(&mean), "{mean}");
}

proptest! {
    #[test]
    fn references_are_distributions(seed in 0u64..1000, lambda in 0.01f64..1.0, beta in 0.01f64..1.0) {
        let g = generate_scale_free(60, 2.5, seed).unwrap();
        let (pr, _) = pagerank(&g, &PageRankParams::with_lambda(lambda)).unwrap();
        let roots = RootSet::new(60, [NodeId(0), NodeId(7)]).unwrap();
        let (prp, _) = pagerank_priors(&g, &PriorsParams::new(beta, roots)).unwrap();
        for r in [pr, prp, indegree(&g)] {
            prop_assert!((r.sum() - 1.0).abs() < 1e-9);
            prop_assert!(r.scores().iter().all(|v| *v >= 0.0));
        }
    }
}
