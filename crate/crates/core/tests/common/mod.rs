#![allow(dead_code)]

use swarmrank::{DirectedGraph, RootSet};

/// Gaussian elimination with partial pivoting.
pub fn dense_solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        a.swap(col, pivot);
        b.swap(col, pivot);
        assert!(a[col][col].abs() > 1e-14, "singular system");
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            let (upper, lower) = a.split_at_mut(row);
            for (x, p) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *x -= f * p;
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let tail: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - tail) / a[row][row];
    }
    x
}

/// Solves `x = (1 - t)(Wᵀx + p·(dᵀx)) + t·p` directly, where `d` marks
/// dangling nodes and `p` is the teleport distribution.
fn stationary(graph: &DirectedGraph, teleport: f64, p: &[f64]) -> Vec<f64> {
    let n = graph.node_count();
    let mut a = vec![vec![0.0; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for e in graph.edges() {
        a[e.target.index()][e.source.index()] -= (1.0 - teleport) * e.weight;
    }
    for j in graph.nodes().filter(|&j| graph.out_degree(j) == 0) {
        for (i, row) in a.iter_mut().enumerate() {
            row[j.index()] -= (1.0 - teleport) * p[i];
        }
    }
    let b = p.iter().map(|v| teleport * v).collect();
    dense_solve(a, b)
}

pub fn pagerank_oracle(graph: &DirectedGraph, lambda: f64) -> Vec<f64> {
    let n = graph.node_count();
    stationary(graph, lambda, &vec![1.0 / n as f64; n])
}

pub fn priors_oracle(graph: &DirectedGraph, roots: &RootSet, beta: f64) -> Vec<f64> {
    stationary(graph, beta, &roots.prior(graph.node_count()))
}

pub fn graph(n: usize, edges: &[(u32, u32, f64)]) -> DirectedGraph {
    DirectedGraph::from_edges(n, edges.iter().map(|&(s, t, w)| (s as usize, t as usize, w))).unwrap()
}

/// Small normalized graphs covering chains, cycles, dangling nodes and
/// uneven weights.
pub fn small_graphs() -> Vec<DirectedGraph> {
    vec![
        graph(3, &[(0, 1, 1.0), (1, 2, 1.0)]),
        graph(2, &[(0, 1, 1.0), (1, 0, 1.0)]),
        graph(4, &[(0, 1, 0.25), (0, 2, 0.75), (1, 2, 1.0), (2, 0, 0.5), (2, 3, 0.5)]),
        graph(
            5,
            &[
                (0, 1, 0.5),
                (0, 4, 0.5),
                (1, 2, 0.2),
                (1, 3, 0.8),
                (3, 0, 1.0),
                (4, 1, 0.6),
                (4, 3, 0.4),
            ],
        ),
        graph(5, &[(1, 0, 1.0), (2, 0, 1.0), (3, 0, 1.0), (4, 0, 1.0)]),
    ]
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
