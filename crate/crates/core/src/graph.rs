//! Directed weighted graph stored in compressed sparse row form.
//!
//! Edges are kept grouped by source in insertion order. Each node carries a
//! prefix sum over its out-weights so that walkers can pick an outgoing edge
//! in `O(log out_degree)`.

use std::collections::HashSet;
use std::fmt;

use rand::seq::index;
use rand::Rng;

use crate::error::{Error, Result};

/// Tolerance used to decide whether a node's out-weights already form a
/// probability distribution.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for NodeId {
    fn from(index: usize) -> Self {
        NodeId(index as u32)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub source: NodeId,
    pub target: NodeId,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DirectedGraph {
    node_count: usize,
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
    weights: Vec<f64>,
    cumulative: Vec<f64>,
    in_degree: Vec<usize>,
}

impl DirectedGraph {
    /// Builds a graph from `(source, target, weight)` triples.
    ///
    /// Rejects out-of-range ids, self-loops, duplicate pairs and weights that
    /// are negative or not finite.
    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        if node_count > u32::MAX as usize {
            return Err(Error::InvalidGraph(format!("too many nodes: {node_count}")));
        }
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (source, target, weight) in edges {
            if source >= node_count || target >= node_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({source}, {target}) outside node range 0..{node_count}"
                )));
            }
            if source == target {
                return Err(Error::InvalidGraph(format!("self-loop on node {source}")));
            }
            if !weight.is_finite() || weight < 0.0 {
                return Err(Error::InvalidGraph(format!(
                    "edge ({source}, {target}) has invalid weight {weight}"
                )));
            }
            if !seen.insert((source, target)) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({source}, {target})")));
            }
            list.push((source, target, weight));
        }
        Ok(Self::from_validated(node_count, list))
    }

    fn from_validated(node_count: usize, list: Vec<(usize, usize, f64)>) -> Self {
        let mut offsets = vec![0usize; node_count + 1];
        for &(s, _, _) in &list {
            offsets[s + 1] += 1;
        }
        for i in 0..node_count {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut targets = vec![NodeId(0); list.len()];
        let mut weights = vec![0.0; list.len()];
        let mut in_degree = vec![0usize; node_count];
        for (s, t, w) in list {
            let slot = cursor[s];
            cursor[s] += 1;
            targets[slot] = NodeId::from(t);
            weights[slot] = w;
            in_degree[t] += 1;
        }
        let cumulative = prefix_sums(&offsets, &weights);
        DirectedGraph {
            node_count,
            offsets,
            targets,
            weights,
            cumulative,
            in_degree,
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.node_count).map(NodeId::from)
    }

    pub fn out_degree(&self, node: NodeId) -> usize {
        let k = node.index();
        self.offsets[k + 1] - self.offsets[k]
    }

    pub fn in_degree(&self, node: NodeId) -> usize {
        self.in_degree[node.index()]
    }

    pub fn in_degrees(&self) -> &[usize] {
        &self.in_degree
    }

    /// Targets and weights of the edges leaving `node`, in insertion order.
    pub fn out_edges(&self, node: NodeId) -> (&[NodeId], &[f64]) {
        let range = self.offsets[node.index()]..self.offsets[node.index() + 1];
        (&self.targets[range.clone()], &self.weights[range])
    }

    pub fn out_weight_sum(&self, node: NodeId) -> f64 {
        let end = self.offsets[node.index() + 1];
        if end == self.offsets[node.index()] {
            0.0
        } else {
            self.cumulative[end - 1]
        }
    }

    pub fn is_dangling(&self, node: NodeId) -> bool {
        self.out_degree(node) == 0
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.nodes().flat_map(move |source| {
            let (targets, weights) = self.out_edges(source);
            targets
                .iter()
                .zip(weights)
                .map(move |(&target, &weight)| Edge { source, target, weight })
        })
    }

    /// Samples an outgoing edge of `node` proportionally to its weight.
    /// Returns `None` for dangling nodes.
    pub fn sample_out_edge<R: Rng + ?Sized>(&self, node: NodeId, rng: &mut R) -> Option<NodeId> {
        let start = self.offsets[node.index()];
        let end = self.offsets[node.index() + 1];
        if start == end {
            return None;
        }
        let cumulative = &self.cumulative[start..end];
        let total = cumulative[cumulative.len() - 1];
        let u = rng.random::<f64>() * total;
        let slot = cumulative.partition_point(|&c| c <= u).min(cumulative.len() - 1);
        Some(self.targets[start + slot])
    }

    /// First node whose out-weights do not sum to one, if any.
    pub fn first_unnormalized(&self) -> Option<(NodeId, f64)> {
        self.nodes()
            .filter(|&n| !self.is_dangling(n))
            .map(|n| (n, self.out_weight_sum(n)))
            .find(|&(_, sum)| (sum - 1.0).abs() > NORMALIZATION_TOLERANCE)
    }

    pub fn is_normalized(&self) -> bool {
        self.first_unnormalized().is_none()
    }

    pub(crate) fn require_normalized(&self) -> Result<()> {
        match self.first_unnormalized() {
            Some((node, sum)) => Err(Error::NotNormalized { node, sum }),
            None => Ok(()),
        }
    }

    /// Divides every out-weight by its node's out-weight sum.
    ///
    /// Nodes whose weights already sum to one (within
    /// [`NORMALIZATION_TOLERANCE`]) and dangling nodes are left untouched, so
    /// the operation is exactly idempotent.
    pub fn normalize_out_weights(&self) -> Result<DirectedGraph> {
        let mut weights = self.weights.clone();
        for node in self.nodes() {
            if self.is_dangling(node) {
                continue;
            }
            let sum = self.out_weight_sum(node);
            if sum <= 0.0 {
                return Err(Error::ZeroWeightSum(node));
            }
            if (sum - 1.0).abs() <= NORMALIZATION_TOLERANCE {
                continue;
            }
            let range = self.offsets[node.index()]..self.offsets[node.index() + 1];
            for w in &mut weights[range] {
                *w /= sum;
            }
        }
        let cumulative = prefix_sums(&self.offsets, &weights);
        Ok(DirectedGraph {
            weights,
            cumulative,
            ..self.clone()
        })
    }
}

fn prefix_sums(offsets: &[usize], weights: &[f64]) -> Vec<f64> {
    let mut cumulative = Vec::with_capacity(weights.len());
    for window in offsets.windows(2) {
        let mut acc = 0.0;
        for &w in &weights[window[0]..window[1]] {
            acc += w;
            cumulative.push(acc);
        }
    }
    cumulative
}

/// Non-empty set of distinct root nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSet {
    members: Vec<NodeId>,
}

impl RootSet {
    pub fn new(node_count: usize, members: impl IntoIterator<Item = NodeId>) -> Result<Self> {
        let members: Vec<NodeId> = members.into_iter().collect();
        if members.is_empty() {
            return Err(Error::param("root set is empty"));
        }
        let mut seen = HashSet::with_capacity(members.len());
        for &m in &members {
            if m.index() >= node_count {
                return Err(Error::param(format!("root {m} outside node range 0..{node_count}")));
            }
            if !seen.insert(m) {
                return Err(Error::param(format!("root {m} listed twice")));
            }
        }
        Ok(RootSet { members })
    }

    /// Picks `⌊proportion · node_count⌋` distinct nodes uniformly at random.
    pub fn random<R: Rng + ?Sized>(node_count: usize, proportion: f64, rng: &mut R) -> Result<Self> {
        if !(proportion > 0.0 && proportion <= 1.0) {
            return Err(Error::param(format!("root proportion {proportion} outside (0, 1]")));
        }
        let size = (proportion * node_count as f64).floor() as usize;
        if size == 0 {
            return Err(Error::param(format!(
                "root proportion {proportion} selects no nodes out of {node_count}"
            )));
        }
        let members = index::sample(rng, node_count, size).into_iter().map(NodeId::from);
        RootSet::new(node_count, members)
    }

    pub fn all(node_count: usize) -> Result<Self> {
        RootSet::new(node_count, (0..node_count).map(NodeId::from))
    }

    pub fn members(&self) -> &[NodeId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, node: NodeId) -> bool {
        self.members.contains(&node)
    }

    /// Uniform prior over the roots: `1/|R|` on members, zero elsewhere.
    pub fn prior(&self, node_count: usize) -> Vec<f64> {
        let mut prior = vec![0.0; node_count];
        let mass = 1.0 / self.members.len() as f64;
        for m in &self.members {
            prior[m.index()] = mass;
        }
        prior
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn weights_of(g: &DirectedGraph, node: usize) -> Vec<f64> {
        g.out_edges(NodeId::from(node)).1.to_vec()
    }

    #[test]
    fn normalizes_equal_split() {
        let g = DirectedGraph::from_edges(3, [(0, 1, 2.0), (0, 2, 2.0)]).unwrap();
        let n = g.normalize_out_weights().unwrap();
        assert_eq!(weights_of(&n, 0), vec![0.5, 0.5]);
    }

    #[test]
    fn normalizes_uneven_split() {
        let g = DirectedGraph::from_edges(3, [(0, 1, 1.0), (0, 2, 3.0)]).unwrap();
        let n = g.normalize_out_weights().unwrap();
        assert_eq!(weights_of(&n, 0), vec![0.25, 0.75]);
        assert!(n.is_normalized());
        assert!(!g.is_normalized());
    }

    #[test]
    fn dangling_node_is_left_alone() {
        let g = DirectedGraph::from_edges(2, [(0, 1, 4.0)]).unwrap();
        let n = g.normalize_out_weights().unwrap();
        assert_eq!(n.out_degree(NodeId(1)), 0);
        assert_eq!(weights_of(&n, 0), vec![1.0]);
    }

    #[test]
    fn zero_weight_sum_is_an_error() {
        let g = DirectedGraph::from_edges(3, [(0, 1, 0.0), (0, 2, 0.0)]).unwrap();
        assert!(matches!(
            g.normalize_out_weights(),
            Err(Error::ZeroWeightSum(NodeId(0)))
        ));
    }

    #[test]
    fn rejects_self_loops_duplicates_and_range() {
        assert!(DirectedGraph::from_edges(2, [(0, 0, 1.0)]).is_err());
        assert!(DirectedGraph::from_edges(2, [(0, 1, 1.0), (0, 1, 2.0)]).is_err());
        assert!(DirectedGraph::from_edges(2, [(0, 2, 1.0)]).is_err());
        assert!(DirectedGraph::from_edges(2, [(0, 1, -1.0)]).is_err());
        assert!(DirectedGraph::from_edges(2, [(0, 1, f64::NAN)]).is_err());
    }

    #[test]
    fn in_degree_matches_edge_targets() {
        let g = DirectedGraph::from_edges(4, [(0, 3, 1.0), (1, 3, 1.0), (2, 3, 1.0), (3, 0, 1.0)]).unwrap();
        assert_eq!(g.in_degrees(), &[1, 0, 0, 3]);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.edges().count(), 4);
    }

    #[test]
    fn edge_sampling_follows_weights() {
        let g = DirectedGraph::from_edges(3, [(0, 1, 0.25), (0, 2, 0.75)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let draws = 1_000_000;
        let mut hits = 0usize;
        for _ in 0..draws {
            if g.sample_out_edge(NodeId(0), &mut rng) == Some(NodeId(1)) {
                hits += 1;
            }
        }
        let freq = hits as f64 / draws as f64;
        assert!((freq - 0.25).abs() < 0.01, "frequency {freq}");
        assert_eq!(g.sample_out_edge(NodeId(1), &mut rng), None);
    }

    #[test]
    fn zero_weight_edge_is_never_sampled() {
        let g = DirectedGraph::from_edges(3, [(0, 1, 0.0), (0, 2, 1.0)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10_000 {
            assert_eq!(g.sample_out_edge(NodeId(0), &mut rng), Some(NodeId(2)));
        }
    }

    #[test]
    fn root_set_validation() {
        assert!(RootSet::new(3, []).is_err());
        assert!(RootSet::new(3, [NodeId(3)]).is_err());
        assert!(RootSet::new(3, [NodeId(1), NodeId(1)]).is_err());
        let r = RootSet::new(4, [NodeId(1), NodeId(3)]).unwrap();
        assert_eq!(r.prior(4), vec![0.0, 0.5, 0.0, 0.5]);
    }

    #[test]
    fn random_root_set_has_floor_size() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let r = RootSet::random(1000, 0.10, &mut rng).unwrap();
        assert_eq!(r.len(), 100);
        assert!(RootSet::random(5, 0.1, &mut rng).is_err());
        assert!(RootSet::random(5, 0.0, &mut rng).is_err());
    }
}
