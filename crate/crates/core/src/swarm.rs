//! Particle-swarm simulation of PageRank and PageRank-Priors.
//!
//! Each particle carries an energy `ε`, a decay scalar `δ`, a home node `h`,
//! a back-probability `β` and its current node `c`. One iteration visits
//! every live particle in index order and
//!
//! 1. deposits `ε` on `c`,
//! 2. decays `ε ← ε − δ·ε`,
//! 3. draws `B(β)`: on success jumps home, otherwise follows an out-edge of
//!    `c` chosen by weight, dying if `c` has none.
//!
//! # Death threshold
//!
//! A particle is alive while `ε > ϑ`. Death is decided before the deposit:
//! a particle whose energy would decay to `ϑ` or below during an iteration
//! dies at the start of that iteration without depositing, and its energy is
//! pinned to `ϑ`. With `ε₀ = 1` a never-stranded particle therefore deposits
//! exactly `#{s ≥ 0 : (1 − δ)^(s+1) > ϑ}` times, which is 113 for
//! `δ = 0.15, ϑ = 1e-8`. See [`lifetime_deposits`]. A consequence is that
//! `δ = 1` particles never deposit.
//!
//! # Randomness
//!
//! Seeding and propagation draw from two independent ChaCha8 streams keyed by
//! `rng_seed`, so a run is a pure function of `(graph, config)`. The
//! parallel mode gives each worker its own stream and accumulator; it is
//! reproducible for a fixed worker count but differs from the sequential
//! result.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, NodeId, RootSet};
use crate::rank::RankVector;

pub const DEFAULT_THETA: f64 = 1e-8;

const SEEDING_STREAM: u64 = 0;
const PROPAGATION_STREAM: u64 = 1;
const WORKER_STREAM_BASE: u64 = 2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Particle {
    pub energy: f64,
    pub decay: f64,
    pub home: NodeId,
    pub back_probability: f64,
    pub current: NodeId,
    pub alive: bool,
    /// Deposits made so far.
    pub deposits: u32,
}

impl Particle {
    pub fn new(home: NodeId, decay: f64, back_probability: f64) -> Self {
        Particle {
            energy: 1.0,
            decay,
            home,
            back_probability,
            current: home,
            alive: true,
            deposits: 0,
        }
    }

    fn kill(&mut self, theta: f64) {
        self.energy = theta;
        self.alive = false;
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Seeding {
    /// `alpha` particles on every node.
    UniformPerNode { alpha: usize },
    /// `per_root` particles on every root, each with that root as home.
    RootSet { roots: RootSet, per_root: usize },
    /// `alpha` particles on each of `⌊phi·|N|⌋` nodes chosen uniformly.
    RandomProportion { phi: f64, alpha: usize },
    /// `alpha · out_degree(n)` particles on every node `n`.
    ProportionalOutDegree { alpha: usize },
}

/// What the returned field measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Readout {
    /// Energy deposited over the whole run.
    #[default]
    Energy,
    /// Number of live particles on each node after the last iteration.
    Occupancy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecutionMode {
    #[default]
    Sequential,
    Parallel {
        workers: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SwarmConfig {
    pub delta: f64,
    pub beta: f64,
    pub theta: f64,
    pub iterations: usize,
    pub seeding: Seeding,
    pub readout: Readout,
    pub mode: ExecutionMode,
    pub rng_seed: u64,
}

impl SwarmConfig {
    pub fn new(seeding: Seeding, delta: f64, beta: f64, iterations: usize, rng_seed: u64) -> Self {
        SwarmConfig {
            delta,
            beta,
            theta: DEFAULT_THETA,
            iterations,
            seeding,
            readout: Readout::Energy,
            mode: ExecutionMode::Sequential,
            rng_seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.delta) {
            return Err(Error::param(format!("delta must lie in [0, 1], got {}", self.delta)));
        }
        if !(0.0..=1.0).contains(&self.beta) {
            return Err(Error::param(format!("beta must lie in [0, 1], got {}", self.beta)));
        }
        if !(self.theta.is_finite() && self.theta > 0.0 && self.theta < 1.0) {
            return Err(Error::param(format!("theta must lie in (0, 1), got {}", self.theta)));
        }
        if self.iterations == 0 {
            return Err(Error::param("iterations must be at least 1"));
        }
        if let ExecutionMode::Parallel { workers: 0 } = self.mode {
            return Err(Error::param("parallel mode needs at least one worker"));
        }
        match &self.seeding {
            Seeding::UniformPerNode { alpha } | Seeding::ProportionalOutDegree { alpha } => check_alpha(*alpha),
            Seeding::RootSet { per_root, .. } => check_alpha(*per_root),
            Seeding::RandomProportion { phi, alpha } => {
                if !(*phi > 0.0 && *phi <= 1.0) {
                    return Err(Error::param(format!("phi must lie in (0, 1], got {phi}")));
                }
                check_alpha(*alpha)
            }
        }
    }
}

fn check_alpha(alpha: usize) -> Result<()> {
    if alpha == 0 {
        Err(Error::param("particles per node must be at least 1"))
    } else {
        Ok(())
    }
}

fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

/// Number of deposits a particle starting at `ε = 1` makes before its energy
/// would fall to `theta`, assuming it never reaches a dangling node.
///
/// Follows the same decay recurrence as the simulation.
pub fn lifetime_deposits(delta: f64, theta: f64) -> Option<u64> {
    if delta <= 0.0 {
        return None;
    }
    let mut energy: f64 = 1.0;
    let mut deposits = 0;
    loop {
        let decayed = energy - delta * energy;
        if decayed <= theta {
            return Some(deposits);
        }
        deposits += 1;
        energy = decayed;
    }
}

pub fn seed_particles(graph: &DirectedGraph, config: &SwarmConfig) -> Result<Vec<Particle>> {
    config.validate()?;
    let n = graph.node_count();
    let make = |home: usize| Particle::new(NodeId::from(home), config.delta, config.beta);
    let particles = match &config.seeding {
        Seeding::UniformPerNode { alpha } => (0..n).flat_map(|k| std::iter::repeat_n(k, *alpha)).map(make).collect(),
        Seeding::RootSet { roots, per_root } => {
            if let Some(r) = roots.members().iter().find(|r| r.index() >= n) {
                return Err(Error::param(format!("root {r} outside graph")));
            }
            roots
                .members()
                .iter()
                .flat_map(|r| std::iter::repeat_n(r.index(), *per_root))
                .map(make)
                .collect()
        }
        Seeding::RandomProportion { phi, alpha } => {
            let size = (phi * n as f64).floor() as usize;
            if size == 0 {
                return Err(Error::param(format!("phi = {phi} seeds no nodes out of {n}")));
            }
            let mut rng = stream(config.rng_seed, SEEDING_STREAM);
            let mut chosen = index::sample(&mut rng, n, size).into_vec();
            chosen.sort_unstable();
            chosen
                .into_iter()
                .flat_map(|k| std::iter::repeat_n(k, *alpha))
                .map(make)
                .collect()
        }
        Seeding::ProportionalOutDegree { alpha } => graph
            .nodes()
            .flat_map(|k| std::iter::repeat_n(k.index(), alpha * graph.out_degree(k)))
            .map(make)
            .collect(),
    };
    Ok(particles)
}

/// Per-node accumulated energy.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyField {
    energy: Vec<f64>,
}

impl EnergyField {
    pub fn zeros(node_count: usize) -> Self {
        EnergyField {
            energy: vec![0.0; node_count],
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.energy
    }

    pub fn total(&self) -> f64 {
        self.energy.iter().sum()
    }

    pub fn to_rank(&self) -> Result<RankVector> {
        RankVector::normalize(self.energy.clone())
    }

    fn merge(&mut self, other: &EnergyField) {
        for (a, b) in self.energy.iter_mut().zip(&other.energy) {
            *a += b;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SwarmStats {
    pub particles_seeded: usize,
    pub particles_dead: usize,
    pub deposit_steps: u64,
    pub iterations_run: usize,
}

impl SwarmStats {
    pub const CSV_HEADER: &'static str = "particles_seeded,particles_dead,deposit_steps,iterations_run";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.particles_seeded, self.particles_dead, self.deposit_steps, self.iterations_run
        )
    }
}

/// Step-wise driver over a particle population.
pub struct Swarm<'g, R = ChaCha8Rng> {
    graph: &'g DirectedGraph,
    particles: Vec<Particle>,
    field: EnergyField,
    theta: f64,
    rng: R,
    alive: usize,
    deposit_steps: u64,
    iterations_run: usize,
}

impl<'g> Swarm<'g> {
    /// Seeds a population from `config` and wires the sequential
    /// propagation stream, so that stepping `k` times reproduces
    /// [`swarm_rank`] with `iterations = k`.
    pub fn from_config(graph: &'g DirectedGraph, config: &SwarmConfig) -> Result<Self> {
        graph.require_normalized()?;
        let particles = seed_particles(graph, config)?;
        Ok(Swarm::new(
            graph,
            particles,
            config.theta,
            stream(config.rng_seed, PROPAGATION_STREAM),
        ))
    }
}

impl<'g, R: Rng> Swarm<'g, R> {
    pub fn new(graph: &'g DirectedGraph, particles: Vec<Particle>, theta: f64, rng: R) -> Self {
        let alive = particles.iter().filter(|p| p.alive).count();
        Swarm {
            graph,
            particles,
            field: EnergyField::zeros(graph.node_count()),
            theta,
            rng,
            alive,
            deposit_steps: 0,
            iterations_run: 0,
        }
    }

    pub fn particles(&self) -> &[Particle] {
        &self.particles
    }

    pub fn iterations_run(&self) -> usize {
        self.iterations_run
    }

    pub fn field(&self) -> &EnergyField {
        &self.field
    }

    pub fn alive(&self) -> usize {
        self.alive
    }

    /// Runs one iteration over every particle.
    pub fn step(&mut self) {
        let graph = self.graph;
        let theta = self.theta;
        for p in self.particles.iter_mut() {
            if !p.alive {
                continue;
            }
            let decayed = p.energy - p.decay * p.energy;
            if decayed <= theta {
                p.kill(theta);
                self.alive -= 1;
                continue;
            }
            self.field.energy[p.current.index()] += p.energy;
            p.deposits += 1;
            self.deposit_steps += 1;
            p.energy = decayed;

            if self.rng.random::<f64>() < p.back_probability {
                p.current = p.home;
            } else {
                match graph.sample_out_edge(p.current, &mut self.rng) {
                    Some(next) => p.current = next,
                    None => {
                        p.kill(theta);
                        self.alive -= 1;
                    }
                }
            }
        }
        self.iterations_run += 1;
    }

    /// Runs up to `iterations` steps, stopping early once every particle is dead.
    pub fn run(&mut self, iterations: usize) {
        for _ in 0..iterations {
            if self.alive == 0 {
                break;
            }
            self.step();
        }
    }

    pub fn occupancy(&self) -> EnergyField {
        let mut field = EnergyField::zeros(self.graph.node_count());
        for p in self.particles.iter().filter(|p| p.alive) {
            field.energy[p.current.index()] += 1.0;
        }
        field
    }

    pub fn stats(&self) -> SwarmStats {
        SwarmStats {
            particles_seeded: self.particles.len(),
            particles_dead: self.particles.len() - self.alive,
            deposit_steps: self.deposit_steps,
            iterations_run: self.iterations_run,
        }
    }

    fn readout(&self, readout: Readout) -> EnergyField {
        match readout {
            Readout::Energy => self.field.clone(),
            Readout::Occupancy => self.occupancy(),
        }
    }

    pub fn into_parts(self) -> (Vec<Particle>, EnergyField) {
        (self.particles, self.field)
    }
}

/// Propagates `particles` for `config.iterations` steps and returns the field
/// selected by `config.readout`.
pub fn propagate(graph: &DirectedGraph, particles: Vec<Particle>, config: &SwarmConfig) -> EnergyField {
    run_swarm(graph, particles, config).0
}

fn run_swarm(graph: &DirectedGraph, particles: Vec<Particle>, config: &SwarmConfig) -> (EnergyField, SwarmStats) {
    match config.mode {
        ExecutionMode::Sequential => {
            let mut swarm = Swarm::new(
                graph,
                particles,
                config.theta,
                stream(config.rng_seed, PROPAGATION_STREAM),
            );
            swarm.run(config.iterations);
            (swarm.readout(config.readout), swarm.stats())
        }
        ExecutionMode::Parallel { workers } => {
            let chunk = particles.len().div_ceil(workers).max(1);
            let parts: Vec<(EnergyField, SwarmStats)> = particles
                .par_chunks(chunk)
                .enumerate()
                .map(|(i, slice)| {
                    let rng = stream(config.rng_seed, WORKER_STREAM_BASE + i as u64);
                    let mut swarm = Swarm::new(graph, slice.to_vec(), config.theta, rng);
                    swarm.run(config.iterations);
                    (swarm.readout(config.readout), swarm.stats())
                })
                .collect();
            let mut field = EnergyField::zeros(graph.node_count());
            let mut stats = SwarmStats::default();
            for (f, s) in &parts {
                field.merge(f);
                stats.particles_seeded += s.particles_seeded;
                stats.particles_dead += s.particles_dead;
                stats.deposit_steps += s.deposit_steps;
                stats.iterations_run = stats.iterations_run.max(s.iterations_run);
            }
            (field, stats)
        }
    }
}

/// Seeds, propagates and normalizes.
pub fn swarm_rank(graph: &DirectedGraph, config: &SwarmConfig) -> Result<(RankVector, SwarmStats)> {
    graph.require_normalized()?;
    let particles = seed_particles(graph, config)?;
    let (field, stats) = run_swarm(graph, particles, config);
    Ok((field.to_rank()?, stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> DirectedGraph {
        DirectedGraph::from_edges(n, edges.iter().map(|&(s, t)| (s, t, 1.0)))
            .unwrap()
            .normalize_out_weights()
            .unwrap()
    }

    fn cycle(n: usize) -> DirectedGraph {
        let edges: Vec<_> = (0..n).map(|k| (k, (k + 1) % n)).collect();
        graph(n, &edges)
    }

    #[test]
    fn first_step_decays_energy() {
        let g = cycle(3);
        let mut swarm = Swarm::new(
            &g,
            vec![Particle::new(NodeId(0), 0.15, 0.0)],
            DEFAULT_THETA,
            stream(1, 1),
        );
        swarm.step();
        let p = swarm.particles()[0];
        assert!((p.energy - 0.85).abs() < 1e-15);
        assert_eq!(swarm.field().values(), &[1.0, 0.0, 0.0]);
        assert_eq!(p.current, NodeId(1));
    }

    #[test]
    fn lifetime_matches_closed_form() {
        // #{s ≥ 0 : (1−δ)^(s+1) > ϑ} = ⌈ln ϑ / ln(1−δ)⌉ − 1 when the ratio is not integral.
        for &(delta, theta) in &[(0.15, 1e-8), (0.5, 1e-8), (0.05, 1e-6), (0.995, 1e-8)] {
            let ratio: f64 = f64::ln(theta) / f64::ln(1.0 - delta);
            let closed = ratio.ceil() as u64 - 1;
            assert_eq!(lifetime_deposits(delta, theta), Some(closed), "delta={delta}");
        }
        assert_eq!(lifetime_deposits(0.15, 1e-8), Some(113));
        assert_eq!(lifetime_deposits(1.0, 1e-8), Some(0));
        assert_eq!(lifetime_deposits(0.0, 1e-8), None);
    }

    #[test]
    fn particle_on_cycle_deposits_lifetime_count() {
        let g = cycle(4);
        let mut swarm = Swarm::new(
            &g,
            vec![Particle::new(NodeId(2), 0.15, 0.0)],
            DEFAULT_THETA,
            stream(5, 1),
        );
        swarm.run(1000);
        let p = swarm.particles()[0];
        assert_eq!(p.deposits, 113);
        assert!(!p.alive);
        assert_eq!(p.energy, DEFAULT_THETA);
        assert_eq!(swarm.stats().iterations_run, 114);
    }

    #[test]
    fn dangling_node_kills_particle() {
        let g = graph(2, &[(0, 1)]);
        let mut swarm = Swarm::new(
            &g,
            vec![Particle::new(NodeId(0), 0.0, 0.0)],
            DEFAULT_THETA,
            stream(1, 1),
        );
        swarm.run(10);
        let p = swarm.particles()[0];
        assert!(!p.alive);
        assert_eq!(p.deposits, 2);
        assert_eq!(swarm.field().values(), &[1.0, 1.0]);
        assert_eq!(swarm.stats().iterations_run, 2);
    }

    #[test]
    fn full_back_probability_keeps_particles_home() {
        let g = cycle(6);
        let particles: Vec<_> = [1, 4].iter().map(|&h| Particle::new(NodeId(h), 0.0, 1.0)).collect();
        let mut swarm = Swarm::new(&g, particles, DEFAULT_THETA, stream(2, 1));
        for _ in 0..50 {
            assert!(swarm.particles().iter().all(|p| p.current == p.home));
            swarm.step();
        }
        let rank = swarm.field().to_rank().unwrap();
        assert_eq!(rank.scores(), &[0.0, 0.5, 0.0, 0.0, 0.5, 0.0]);
    }

    #[test]
    fn seeding_counts() {
        let star = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let config = SwarmConfig::new(Seeding::ProportionalOutDegree { alpha: 2 }, 0.15, 0.0, 1, 0);
        let particles = seed_particles(&star, &config).unwrap();
        assert_eq!(particles.len(), 8);
        assert!(particles.iter().all(|p| p.home == NodeId(0) && p.current == NodeId(0)));
        assert!(particles.iter().all(|p| p.energy == 1.0 && p.alive));

        let config = SwarmConfig::new(Seeding::UniformPerNode { alpha: 3 }, 0.15, 0.0, 1, 0);
        assert_eq!(seed_particles(&star, &config).unwrap().len(), 15);

        let roots = RootSet::new(5, [NodeId(2), NodeId(4)]).unwrap();
        let config = SwarmConfig::new(Seeding::RootSet { roots, per_root: 10 }, 0.0, 0.5, 1, 0);
        let particles = seed_particles(&star, &config).unwrap();
        assert_eq!(particles.len(), 20);
        assert_eq!(particles.iter().filter(|p| p.home == NodeId(2)).count(), 10);
        assert!(particles.iter().all(|p| p.back_probability == 0.5 && p.decay == 0.0));
    }

    #[test]
    fn random_proportion_seeds_floor_of_phi_n() {
        let g = cycle(100);
        let config = SwarmConfig::new(Seeding::RandomProportion { phi: 0.24, alpha: 2 }, 0.15, 0.0, 1, 9);
        let particles = seed_particles(&g, &config).unwrap();
        assert_eq!(particles.len(), 48);
        let mut homes: Vec<_> = particles.iter().map(|p| p.home).collect();
        homes.dedup();
        assert_eq!(homes.len(), 24);

        let tiny = SwarmConfig::new(Seeding::RandomProportion { phi: 0.001, alpha: 1 }, 0.15, 0.0, 1, 9);
        assert!(seed_particles(&g, &tiny).is_err());
    }

    #[test]
    fn config_validation() {
        let g = cycle(3);
        let base = SwarmConfig::new(Seeding::UniformPerNode { alpha: 1 }, 0.15, 0.0, 5, 0);
        for bad in [
            SwarmConfig {
                delta: 1.5,
                ..base.clone()
            },
            SwarmConfig {
                beta: -0.1,
                ..base.clone()
            },
            SwarmConfig {
                theta: 0.0,
                ..base.clone()
            },
            SwarmConfig {
                iterations: 0,
                ..base.clone()
            },
            SwarmConfig {
                seeding: Seeding::UniformPerNode { alpha: 0 },
                ..base.clone()
            },
            SwarmConfig {
                seeding: Seeding::RandomProportion { phi: 0.0, alpha: 1 },
                ..base.clone()
            },
            SwarmConfig {
                mode: ExecutionMode::Parallel { workers: 0 },
                ..base.clone()
            },
        ] {
            assert!(swarm_rank(&g, &bad).is_err(), "{bad:?}");
        }
        assert!(swarm_rank(&g, &base).is_ok());
    }

    #[test]
    fn empty_population_yields_zero_field() {
        let g = cycle(3);
        let config = SwarmConfig::new(Seeding::UniformPerNode { alpha: 1 }, 0.15, 0.0, 5, 0);
        let field = propagate(&g, Vec::new(), &config);
        assert_eq!(field.values(), &[0.0, 0.0, 0.0]);
        assert!(matches!(field.to_rank(), Err(Error::EmptyField)));
    }

    #[test]
    fn two_cycle_is_balanced() {
        let g = cycle(2);
        let config = SwarmConfig::new(Seeding::UniformPerNode { alpha: 10 }, 0.15, 0.0, 50, 3);
        let (rank, _) = swarm_rank(&g, &config).unwrap();
        assert!((rank[0] - 0.5).abs() <= 0.02 && (rank[1] - 0.5).abs() <= 0.02);
    }

    #[test]
    fn deposit_accounting_is_exact_per_particle() {
        let g = crate::generate::generate_scale_free(200, 2.5, 4).unwrap();
        let config = SwarmConfig::new(Seeding::UniformPerNode { alpha: 3 }, 0.2, 0.1, 40, 8);
        let particles = seed_particles(&g, &config).unwrap();
        let mut swarm = Swarm::new(&g, particles, config.theta, stream(config.rng_seed, PROPAGATION_STREAM));
        swarm.run(config.iterations);
        let expected: f64 = swarm
            .particles()
            .iter()
            .map(|p| {
                let mut e: f64 = 1.0;
                let mut sum = 0.0;
                for _ in 0..p.deposits {
                    sum += e;
                    e -= 0.2 * e;
                }
                sum
            })
            .sum();
        let total = swarm.field().total();
        assert!((total - expected).abs() <= 1e-9 * expected, "{total} vs {expected}");
        let deposits: u64 = swarm.particles().iter().map(|p| p.deposits as u64).sum();
        assert_eq!(deposits, swarm.stats().deposit_steps);
    }

    #[test]
    fn energy_strictly_decreases_and_dead_particles_stay_silent() {
        let g = crate::generate::generate_scale_free(100, 2.5, 2).unwrap();
        let config = SwarmConfig::new(Seeding::UniformPerNode { alpha: 2 }, 0.3, 0.0, 1, 1);
        let particles = seed_particles(&g, &config).unwrap();
        let mut swarm = Swarm::new(&g, particles, config.theta, stream(1, 1));
        for _ in 0..60 {
            let before = swarm.particles().to_vec();
            swarm.step();
            for (b, a) in before.iter().zip(swarm.particles()) {
                if !b.alive {
                    assert!(!a.alive);
                    assert_eq!(a.deposits, b.deposits);
                } else if a.alive {
                    assert!(a.energy < b.energy);
                }
            }
        }
    }

    #[test]
    fn parallel_mode_is_reproducible_and_conserves_population() {
        let g = crate::generate::generate_scale_free(300, 2.5, 6).unwrap();
        let mut config = SwarmConfig::new(Seeding::UniformPerNode { alpha: 5 }, 0.15, 0.0, 20, 12);
        config.mode = ExecutionMode::Parallel { workers: 4 };
        let (a, sa) = swarm_rank(&g, &config).unwrap();
        let (b, sb) = swarm_rank(&g, &config).unwrap();
        assert_eq!(a, b);
        assert_eq!(sa, sb);
        assert_eq!(sa.particles_seeded, 1500);
        assert!((a.sum() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn occupancy_after_one_step_counts_arrivals() {
        let g = graph(4, &[(0, 3), (1, 3), (2, 3), (3, 0)]);
        let mut config = SwarmConfig::new(Seeding::ProportionalOutDegree { alpha: 5 }, 0.15, 0.0, 1, 0);
        config.readout = Readout::Occupancy;
        let (rank, _) = swarm_rank(&g, &config).unwrap();
        assert_eq!(rank.scores(), &[0.25, 0.0, 0.0, 0.75]);
    }
}
