//! Experiment harness: correlation sweeps, the speedup model and benchmark,
//! and the iteration trend across γ.

mod seeds;
pub mod speedup;
pub mod stats;
pub mod sweep;
pub mod trend;

pub use seeds::derive_seed;
pub use speedup::{benchmark_speedup, theoretical_speedup, BenchmarkSpec, BenchmarkTrial, SpeedupReport};
pub use stats::{pearson, summarize, Summary};
pub use sweep::{
    cost_optimum, run_sweep, step_grid, unit_grid, ExperimentId, ExperimentResult, PointSummary, SweepRow, SweepSpec,
};
pub use trend::{iteration_trend_check, write_trend_csv, TrendRow, TrendSpec};
