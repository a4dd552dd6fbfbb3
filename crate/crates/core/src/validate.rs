//! Self-check battery: runs the oracle comparisons as named pass/fail
//! properties with measured statistics, for the CLI to print.

use crate::config::ExperimentConfig;
use crate::emit::render_csv;
use crate::env::environment;
use crate::feedback::{rank_break, RankingFeedback};
use crate::mnl::MnlInstance;
use crate::oracle::{
    best_subset_bruteforce, empirical_ranking_distribution, enumerate_ranking_distribution,
    tv_distance,
};
use crate::regret::{geometric_checkpoints, instant_regret_topk, instant_regret_winner, Objective};
use crate::runner::run_experiment;
use crate::stats::PairwiseStats;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Result of one named property check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub pass: bool,
    /// Measured statistic and the limit it was held to.
    pub detail: String,
}

impl CheckOutcome {
    fn measured(name: &'static str, value: f64, limit: f64, what: &str) -> Self {
        Self {
            name,
            pass: value <= limit,
            detail: format!("{what} = {value:.6} (limit {limit})"),
        }
    }

    fn exact(name: &'static str, pass: bool, detail: String) -> Self {
        Self { name, pass, detail }
    }
}

/// Runs every property; `quick` trades draw counts for looser limits.
pub fn run_checks(quick: bool) -> Vec<CheckOutcome> {
    vec![
        ranking_distribution_check(quick),
        winner_frequency_check(quick),
        scale_invariance_check(),
        confidence_coverage_check(quick),
        rank_break_conservation_check(),
        subset_oracle_check(),
        regret_baseline_check(),
        determinism_check(),
        checkpoint_schedule_check(),
    ]
}

/// Sampled ranking prefixes follow the exact enumerated law.
fn ranking_distribution_check(quick: bool) -> CheckOutcome {
    let (draws, limit) = if quick { (20_000, 0.02) } else { (200_000, 0.005) };
    let inst = environment("g1").unwrap();
    let s = [0, 1, 2, 3];
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let exact = enumerate_ranking_distribution(&inst, &s, 2).unwrap();
    let emp = empirical_ranking_distribution(&inst, &s, 2, draws, &mut rng).unwrap();
    let tv = tv_distance(&emp, &exact).unwrap();
    CheckOutcome::measured("ranking-distribution", tv, limit, "tv")
}

/// The strong item wins a two-item duel at its weight share.
fn winner_frequency_check(quick: bool) -> CheckOutcome {
    let (draws, limit) = if quick { (10_000, 0.03) } else { (100_000, 0.01) };
    let inst = environment("g1").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let mut wins = 0u64;
    for _ in 0..draws {
        if inst.sample_top_m(&[0, 1], 1, &mut rng).unwrap()[0] == 0 {
            wins += 1;
        }
    }
    let freq = wins as f64 / draws as f64;
    CheckOutcome::measured("winner-frequency", (freq - 0.8).abs(), limit, "|freq - 0.8|")
}

/// Scaling all weights by a constant leaves sampled rankings unchanged.
fn scale_invariance_check() -> CheckOutcome {
    let base = MnlInstance::new(vec![1.0, 0.76, 0.52, 0.28, 0.04]).unwrap();
    let scaled = base.scaled(3.0).unwrap();
    let s = [0, 1, 2, 3, 4];
    let mut rng_a = ChaCha8Rng::seed_from_u64(103);
    let mut rng_b = ChaCha8Rng::seed_from_u64(103);
    let mut mismatches = 0u64;
    let draws = 2_000;
    for _ in 0..draws {
        let a = base.sample_top_m(&s, 2, &mut rng_a).unwrap();
        let b = scaled.sample_top_m(&s, 2, &mut rng_b).unwrap();
        if a != b {
            mismatches += 1;
        }
    }
    CheckOutcome::exact(
        "scale-invariance",
        mismatches == 0,
        format!("mismatched draws = {mismatches}/{draws}"),
    )
}

/// Upper confidence bounds cover the true win rates almost always.
fn confidence_coverage_check(quick: bool) -> CheckOutcome {
    let rounds = if quick { 500 } else { 2_000 };
    let inst = environment("g1").unwrap();
    let mut stats = PairwiseStats::new(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    let mut checks = 0u64;
    let mut violations = 0u64;
    for t in 1..=rounds {
        for j in 1..4usize {
            let order = inst.sample_top_m(&[0, j], 1, &mut rng).unwrap();
            let loser = if order[0] == 0 { j } else { 0 };
            stats
                .record(crate::feedback::PairwiseOutcome { winner: order[0], loser })
                .unwrap();
        }
        if t >= 20 {
            for j in 1..4usize {
                let u = stats.ucb(0, j, t, 0.51).unwrap();
                let p = inst.pair_prob(0, j).unwrap();
                checks += 1;
                if u < p {
                    violations += 1;
                }
            }
        }
    }
    let frac = violations as f64 / checks as f64;
    CheckOutcome::measured("confidence-coverage", frac, 0.02, "violation fraction")
}

/// Rank-breaking emits exactly the promised duel count, without duplicates.
fn rank_break_conservation_check() -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let n = 8;
    let mut failures = 0u64;
    let trials = 200;
    for _ in 0..trials {
        let size = rng.random_range(1..=n);
        let mut items: Vec<usize> = (0..n).collect();
        items.shuffle(&mut rng);
        items.truncate(size);
        items.sort_unstable();
        let m = rng.random_range(1..=size);
        let mut order = items.clone();
        order.shuffle(&mut rng);
        order.truncate(m);
        let fb = RankingFeedback::new(items.clone(), order, n).unwrap();
        let duels = rank_break(&fb);
        let mut seen = std::collections::HashSet::new();
        let distinct = duels.iter().all(|d| seen.insert((d.winner, d.loser)));
        if duels.len() != fb.pair_count() || !distinct {
            failures += 1;
        }
    }
    CheckOutcome::exact(
        "rank-break-conservation",
        failures == 0,
        format!("failing trials = {failures}/{trials}"),
    )
}

/// Exhaustive subset search agrees with the sort-based optimum.
fn subset_oracle_check() -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let mut failures = 0u64;
    let trials = 30;
    for _ in 0..trials {
        let n = rng.random_range(3..=9);
        let theta: Vec<f64> = (0..n).map(|_| rng.random::<f64>() + 0.05).collect();
        let inst = MnlInstance::new(theta).unwrap();
        let k = rng.random_range(1..=n - 1);
        let brute = best_subset_bruteforce(&inst, k, Objective::TopK).unwrap();
        if brute != inst.top_k_set(k).unwrap() {
            failures += 1;
        }
        let winner = best_subset_bruteforce(&inst, k, Objective::Winner).unwrap();
        if winner != vec![inst.best_item()] {
            failures += 1;
        }
    }
    CheckOutcome::exact(
        "subset-oracle",
        failures == 0,
        format!("failing trials = {failures}/{trials}"),
    )
}

/// Optimal play has zero regret; known suboptimal sets match hand values.
fn regret_baseline_check() -> CheckOutcome {
    let inst = environment("g1").unwrap();
    let zero_winner = instant_regret_winner(&inst, &[0]).unwrap();
    let zero_topk = instant_regret_topk(&inst, &inst.top_k_set(5).unwrap(), 5).unwrap();
    let pure = instant_regret_winner(&inst, &[1, 2, 3]).unwrap();
    let pass = zero_winner == 0.0 && zero_topk == 0.0 && (pure - 0.6).abs() < 1e-12;
    CheckOutcome::exact(
        "regret-baseline",
        pass,
        format!("optimal = {zero_winner}/{zero_topk}, suboptimal gap error = {:.2e}", (pure - 0.6).abs()),
    )
}

/// The same config renders byte-identical CSV twice.
fn determinism_check() -> CheckOutcome {
    let cfg = ExperimentConfig::parse(
        "env = g1\nalgorithm = maxmin\nobjective = winner\nk = 4\nm = 2\n\
         horizon = 300\nruns = 3\ncheckpoints = 12\nseed = 5\n",
    )
    .unwrap();
    let a = render_csv(&run_experiment(&cfg).unwrap());
    let b = render_csv(&run_experiment(&cfg).unwrap());
    CheckOutcome::exact(
        "determinism",
        a == b,
        format!("identical bytes = {}", a == b),
    )
}

/// Checkpoint schedules are strictly increasing and end at the horizon.
fn checkpoint_schedule_check() -> CheckOutcome {
    let mut failures = 0u64;
    for (horizon, count) in [(100_000u64, 500usize), (1, 500), (10, 3), (97, 41)] {
        let pts = geometric_checkpoints(horizon, count).unwrap();
        let ok = pts.first().map(|&p| p >= 1).unwrap_or(false)
            && *pts.last().unwrap() == horizon
            && pts.windows(2).all(|w| w[0] < w[1])
            && pts.len() <= count + 1;
        if !ok {
            failures += 1;
        }
    }
    CheckOutcome::exact(
        "checkpoint-schedule",
        failures == 0,
        format!("failing schedules = {failures}/4"),
    )
}
