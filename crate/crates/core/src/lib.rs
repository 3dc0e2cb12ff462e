//! Graph influence ranking with a particle-swarm approximation.
//!
//! * [`graph`] and [`generate`]: directed weighted graphs and a scale-free
//!   generator with predetermined in-degrees.
//! * [`reference`]: exact PageRank, PageRank-Priors and In-Degree.
//! * [`swarm`]: energy-depositing particles that approximate the above.
//! * [`experiments`]: correlation sweeps, speedup model and benchmarks.
//! * [`io`]: TSV edge lists, root lists and rank CSVs.

pub mod error;
pub mod experiments;
pub mod generate;
pub mod graph;
pub mod io;
pub mod rank;
pub mod reference;
pub mod swarm;

pub use error::{Error, Result};
pub use generate::generate_scale_free;
pub use graph::{DirectedGraph, Edge, NodeId, RootSet};
pub use rank::RankVector;
pub use reference::{indegree, pagerank, pagerank_priors, ConvergenceReport, PageRankParams, PriorsParams};
pub use swarm::{
    lifetime_deposits, propagate, seed_particles, swarm_rank, EnergyField, ExecutionMode, Particle, Readout, Seeding,
    Swarm, SwarmConfig, SwarmStats,
};
