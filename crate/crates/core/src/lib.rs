//! Online subset selection under multinomial-logit relative feedback.
//!
//! A simulation library for bandit algorithms that repeatedly play a subset
//! of items, observe a (partial) ranking drawn from the multinomial-logit
//! choice model, and try to converge on the best item or the best k items
//! while paying as little regret as possible along the way.
//!
//! The crate provides the choice model and its sampler ([`mnl`]), ranking
//! feedback and rank-breaking into pairwise duels ([`feedback`]), win-count
//! statistics with confidence bounds ([`stats`]), the max-min selection
//! algorithms for both objectives ([`maxmin`], [`rec_maxmin`]), a
//! Thompson-sampling baseline ([`sp_ts`]), regret accounting ([`regret`]),
//! closed-form bound constants ([`bounds`]), brute-force oracles
//! ([`oracle`]), named environments ([`env`]), and a seeded experiment
//! harness with CSV/SVG output ([`config`], [`runner`], [`emit`],
//! [`validate`]).

pub mod bounds;
pub mod config;
pub mod emit;
pub mod env;
pub mod error;
pub mod feedback;
pub mod maxmin;
pub mod mnl;
pub mod oracle;
pub mod regret;
pub mod rec_maxmin;
pub mod runner;
pub mod sp_ts;
pub mod stats;
pub mod validate;

pub use bounds::BoundsReport;
pub use config::{Algorithm, ExperimentConfig};
pub use emit::{parse_csv, render_csv, render_meta, render_svg, write_outputs, Series};
pub use env::{environment, ENVIRONMENT_NAMES};
pub use error::{Error, Result};
pub use feedback::{rank_break, PairwiseOutcome, RankingFeedback};
pub use maxmin::{build_s, candidate_set, MaxMinRound, MaxMinUcb};
pub use mnl::{validate_subset, MnlInstance};
pub use oracle::{
    best_subset_bruteforce, empirical_ranking_distribution, enumerate_ranking_distribution,
    tv_distance, ExactDistribution,
};
pub use regret::{
    geometric_checkpoints, instant_regret, instant_regret_topk, instant_regret_winner, Objective,
    RegretTrajectory,
};
pub use rec_maxmin::{RecMaxMinUcb, RecRound};
pub use runner::{run_experiment, run_experiment_with, AggregateResult};
pub use sp_ts::{SpTs, SpTsRound};
pub use stats::{check_alpha, PairwiseStats, UcbMatrix, MIN_ALPHA};
pub use validate::{run_checks, CheckOutcome};
