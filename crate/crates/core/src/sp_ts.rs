//! Thompson-sampling baseline over per-item Beta posteriors.
//!
//! Every item carries a Beta(a_i, b_i) posterior seeded at Beta(1, 1); a_i
//! counts duel wins and b_i duel losses accumulated through rank-breaking.
//! Each round samples one score per item and plays the k highest scorers.
//! Feedback depends on the objective: a top-m ranking for the winner
//! objective, a full ranking for top-k.

use crate::error::{Error, Result};
use crate::feedback::{rank_break, RankingFeedback};
use crate::mnl::MnlInstance;
use crate::regret::Objective;
use crate::stats::PairwiseStats;
use rand::Rng;
use rand_distr::{Beta, Distribution};

/// One played round of [`SpTs`].
#[derive(Debug, Clone)]
pub struct SpTsRound {
    /// Round index (1-based).
    pub t: u64,
    /// Played subset, ascending; always size k.
    pub played: Vec<usize>,
    /// Observed ranking feedback (length m or k by objective).
    pub feedback: RankingFeedback,
    /// Posterior scores sampled this round, indexed by item.
    pub scores: Vec<f64>,
}

/// Score-and-pick Thompson sampling with Beta posteriors on duel counts.
#[derive(Debug, Clone)]
pub struct SpTs {
    n: usize,
    k: usize,
    m: usize,
    objective: Objective,
    stats: PairwiseStats,
    a: Vec<f64>,
    b: Vec<f64>,
    t: u64,
}

impl SpTs {
    /// Requires `1 <= k <= n`; for the winner objective also `1 <= m <= k`
    /// (`m` is ignored under top-k, where feedback is the full ranking).
    pub fn new(n: usize, k: usize, m: usize, objective: Objective) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= k <= n, got k = {k}, n = {n}"
            )));
        }
        let m = match objective {
            Objective::Winner => {
                if m == 0 || m > k {
                    return Err(Error::InvalidParameter(format!(
                        "need 1 <= m <= k, got m = {m}, k = {k}"
                    )));
                }
                m
            }
            Objective::TopK => k,
        };
        Ok(Self {
            n,
            k,
            m,
            objective,
            stats: PairwiseStats::new(n)?,
            a: vec![1.0; n],
            b: vec![1.0; n],
            t: 1,
        })
    }

    /// Number of items.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Played subset size.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Feedback prefix length actually used.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Objective the feedback length follows.
    pub fn objective(&self) -> Objective {
        self.objective
    }

    /// Round the next step will play (starts at 1).
    pub fn next_round(&self) -> u64 {
        self.t
    }

    /// Accumulated pairwise statistics.
    pub fn stats(&self) -> &PairwiseStats {
        &self.stats
    }

    /// Beta posterior parameters for item `i`: one plus its total duel wins
    /// and one plus its total duel losses.
    pub fn posterior(&self, i: usize) -> (f64, f64) {
        (self.a[i], self.b[i])
    }

    /// Plays one round against `env` and records the rank-broken feedback.
    pub fn step(&mut self, env: &MnlInstance, rng: &mut impl Rng) -> SpTsRound {
        assert_eq!(env.n(), self.n, "environment size mismatch");
        let t = self.t;
        let scores: Vec<f64> = (0..self.n)
            .map(|i| {
                Beta::new(self.a[i], self.b[i])
                    .expect("posterior parameters are always >= 1")
                    .sample(rng)
            })
            .collect();
        let mut by_score: Vec<usize> = (0..self.n).collect();
        by_score.sort_by(|&x, &y| {
            scores[y].partial_cmp(&scores[x]).unwrap().then(x.cmp(&y))
        });
        let mut played: Vec<usize> = by_score[..self.k].to_vec();
        played.sort_unstable();

        let order = env
            .sample_top_m(&played, self.m, rng)
            .expect("played set is always a valid non-empty subset");
        let feedback = RankingFeedback::new(played.clone(), order, self.n)
            .expect("sampled ranking is always consistent with the played set");
        let outcomes = rank_break(&feedback);
        for o in &outcomes {
            self.a[o.winner] += 1.0;
            self.b[o.loser] += 1.0;
        }
        self.stats
            .record_all(&outcomes)
            .expect("rank-broken outcomes are always valid duels");
        self.stats.set_round(t);
        self.t = t + 1;

        SpTsRound { t, played, feedback, scores }
    }
}
