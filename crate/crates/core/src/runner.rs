//! Seeded multi-run experiment execution and aggregation.
//!
//! Runs are mutually independent: run r seeds its own generator with
//! `base_seed + r` and owns all mutable state, so they may execute on worker
//! threads. Results are merged in run-index order, making the aggregate
//! independent of scheduling.

use crate::config::{Algorithm, ExperimentConfig};
use crate::error::Result;
use crate::maxmin::MaxMinUcb;
use crate::mnl::MnlInstance;
use crate::regret::{geometric_checkpoints, instant_regret, Objective, RegretTrajectory};
use crate::rec_maxmin::RecMaxMinUcb;
use crate::sp_ts::SpTs;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Aggregated outcome of all runs of one config.
#[derive(Debug, Clone)]
pub struct AggregateResult {
    /// The config that produced this result, echoed for provenance.
    pub config: ExperimentConfig,
    /// Checkpoint rounds shared by every run.
    pub checkpoints: Vec<u64>,
    /// Mean cumulative regret across runs at each checkpoint.
    pub mean: Vec<f64>,
    /// Population standard deviation across runs at each checkpoint.
    pub std: Vec<f64>,
    /// Final cumulative regret of each run, in run order.
    pub final_regrets: Vec<f64>,
    /// Win-count dump of run 0's statistics, when requested.
    pub stats_dump: Option<String>,
}

impl AggregateResult {
    /// Mean cumulative regret at the horizon.
    pub fn final_mean(&self) -> f64 {
        *self.mean.last().expect("checkpoint schedules are never empty")
    }
}

struct SingleRun {
    cumulative: Vec<f64>,
    final_regret: f64,
    stats_dump: Option<String>,
}

fn run_one(
    cfg: &ExperimentConfig,
    inst: &MnlInstance,
    checkpoints: &[u64],
    run_idx: usize,
    want_stats: bool,
) -> Result<SingleRun> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed + run_idx as u64);
    let mut trajectory = RegretTrajectory::new(checkpoints.to_vec())?;
    let mut cum = 0.0;
    let keep_stats = want_stats && run_idx == 0;

    let stats_dump = match cfg.algorithm {
        Algorithm::MaxMin => {
            let mut alg = MaxMinUcb::new(inst.n(), cfg.k, cfg.m, cfg.alpha)?;
            for t in 1..=cfg.horizon {
                let round = alg.step(inst, &mut rng);
                cum += instant_regret(Objective::Winner, inst, &round.played, cfg.k)?;
                trajectory.observe(t, cum);
            }
            keep_stats.then(|| alg.stats().dump_csv())
        }
        Algorithm::RecMaxMin => {
            let mut alg = RecMaxMinUcb::new(inst.n(), cfg.k, cfg.alpha)?;
            for t in 1..=cfg.horizon {
                let round = alg.step(inst, &mut rng);
                cum += instant_regret(Objective::TopK, inst, &round.played, cfg.k)?;
                trajectory.observe(t, cum);
            }
            keep_stats.then(|| alg.stats().dump_csv())
        }
        Algorithm::SpTs => {
            let mut alg = SpTs::new(inst.n(), cfg.k, cfg.m, cfg.objective)?;
            for t in 1..=cfg.horizon {
                let round = alg.step(inst, &mut rng);
                cum += instant_regret(cfg.objective, inst, &round.played, cfg.k)?;
                trajectory.observe(t, cum);
            }
            keep_stats.then(|| alg.stats().dump_csv())
        }
    };
    debug_assert!(trajectory.complete());
    Ok(SingleRun {
        cumulative: trajectory.cumulative().to_vec(),
        final_regret: cum,
        stats_dump,
    })
}

/// Executes every run of `cfg` and aggregates. `want_stats` additionally
/// captures run 0's win-count matrix as CSV.
pub fn run_experiment_with(cfg: &ExperimentConfig, want_stats: bool) -> Result<AggregateResult> {
    cfg.validate()?;
    let inst = cfg.instance()?;
    let checkpoints = geometric_checkpoints(cfg.horizon, cfg.checkpoints)?;

    let mut runs: Vec<SingleRun> = (0..cfg.runs)
        .into_par_iter()
        .map(|r| run_one(cfg, &inst, &checkpoints, r, want_stats))
        .collect::<Result<_>>()?;

    let count = runs.len() as f64;
    let mut mean = Vec::with_capacity(checkpoints.len());
    let mut std = Vec::with_capacity(checkpoints.len());
    for c in 0..checkpoints.len() {
        let mu = runs.iter().map(|r| r.cumulative[c]).sum::<f64>() / count;
        let var = runs.iter().map(|r| (r.cumulative[c] - mu).powi(2)).sum::<f64>() / count;
        mean.push(mu);
        std.push(var.sqrt());
    }
    let final_regrets = runs.iter().map(|r| r.final_regret).collect();
    let stats_dump = runs.get_mut(0).and_then(|r| r.stats_dump.take());

    Ok(AggregateResult { config: cfg.clone(), checkpoints, mean, std, final_regrets, stats_dump })
}

/// [`run_experiment_with`] without the statistics dump.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<AggregateResult> {
    run_experiment_with(cfg, false)
}
