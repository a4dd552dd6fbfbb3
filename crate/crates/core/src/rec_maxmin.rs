//! Max-min UCB selection for the top-k recommendation objective.
//!
//! The algorithm maintains one holding slot per rank position 1..k-1. Each
//! round it walks the slots over a shrinking item pool: a held item that is
//! still the position's candidate over the pool is kept and removed from the
//! pool; otherwise the slot is refilled greedily and the remaining positions
//! are topped up in one shot. The final position carries a challenger slot
//! that is only confirmed once it is the unique candidate among the leftover
//! pool. Feedback is a full ranking of the k played items.

use crate::error::{Error, Result};
use crate::feedback::{rank_break, RankingFeedback};
use crate::maxmin::{build_additions, candidate_set_with};
use crate::mnl::MnlInstance;
use crate::stats::{check_alpha, PairwiseStats};
use rand::Rng;

/// One played round of [`RecMaxMinUcb`].
#[derive(Debug, Clone)]
pub struct RecRound {
    /// Round index (1-based).
    pub t: u64,
    /// Played subset, ascending; always size k.
    pub played: Vec<usize>,
    /// Observed full-ranking feedback over the played set.
    pub feedback: RankingFeedback,
    /// Holding slots after the round; index p holds the incumbent for rank
    /// position p + 1. The last slot is the challenger.
    pub slots: Vec<Option<usize>>,
    /// Candidate set computed for each slot processed this round, over the
    /// pool as it stood at that slot. Slots skipped by an early refill keep
    /// an empty entry.
    pub slot_candidates: Vec<Vec<usize>>,
    /// Slot index (0-based) whose refill topped the set up to k items and
    /// ended the walk, if that happened.
    pub early_exit: Option<usize>,
}

/// Top-k objective subset bandit: per-position candidate filtering with held
/// incumbents and greedy refill.
#[derive(Debug, Clone)]
pub struct RecMaxMinUcb {
    n: usize,
    k: usize,
    alpha: f64,
    stats: PairwiseStats,
    slots: Vec<Option<usize>>,
    t: u64,
}

impl RecMaxMinUcb {
    /// Requires `2 <= k < n` and `alpha > 1/2`.
    pub fn new(n: usize, k: usize, alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if k < 2 {
            return Err(Error::InvalidParameter(format!(
                "top-k selection needs k >= 2, got k = {k}"
            )));
        }
        if k >= n {
            return Err(Error::InvalidParameter(format!(
                "need k < n so a challenger exists, got k = {k}, n = {n}"
            )));
        }
        Ok(Self { n, k, alpha, stats: PairwiseStats::new(n)?, slots: vec![None; k], t: 1 })
    }

    /// Number of items.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Recommendation size.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Exploration parameter.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Round the next step will play (starts at 1).
    pub fn next_round(&self) -> u64 {
        self.t
    }

    /// Accumulated pairwise statistics.
    pub fn stats(&self) -> &PairwiseStats {
        &self.stats
    }

    /// Current holding slots (position p + 1's incumbent at index p).
    pub fn slots(&self) -> &[Option<usize>] {
        &self.slots
    }

    /// Plays one round against `env` and records the rank-broken feedback.
    pub fn step(&mut self, env: &MnlInstance, rng: &mut impl Rng) -> RecRound {
        assert_eq!(env.n(), self.n, "environment size mismatch");
        let t = self.t;
        let ucb = self.stats.ucb_matrix(t, self.alpha);
        let u = |i, j| ucb.get(i, j);

        let mut slots = self.slots.clone();
        let mut pool: Vec<usize> = (0..self.n).collect();
        let mut played: Vec<usize> = Vec::with_capacity(self.k);
        let mut slot_candidates: Vec<Vec<usize>> = vec![Vec::new(); self.k];
        let mut early_exit = None;

        // Claiming an item for one slot invalidates any stale copy that a
        // later slot still holds from a previous round.
        let claim = |slots: &mut [Option<usize>], from: usize, item: usize| {
            for s in slots.iter_mut().skip(from) {
                if *s == Some(item) {
                    *s = None;
                }
            }
        };

        for p in 0..self.k - 1 {
            let cands = candidate_set_with(u, &pool);
            slot_candidates[p] = cands.clone();
            let kept = slots[p].filter(|h| cands.contains(h));
            if let Some(item) = kept {
                slots[p] = Some(item);
                claim(&mut slots, p + 1, item);
                pool.retain(|&x| x != item);
                played.push(item);
            } else {
                // Refill: pick one item for this slot by the max-min rule
                // over the current pool, then top the set up to k in the
                // same call and stop walking.
                let need = self.k - played.len();
                let additions = build_additions(&u, &played, &pool, need);
                let pick = additions[0];
                slots[p] = Some(pick);
                claim(&mut slots, p + 1, pick);
                played.extend(&additions);
                early_exit = Some(p);
                break;
            }
        }

        if early_exit.is_none() {
            // Final position: the challenger slot is only committed when the
            // leftover pool has collapsed to a unique candidate.
            let p = self.k - 1;
            let cands = candidate_set_with(u, &pool);
            slot_candidates[p] = cands.clone();
            let kept = slots[p].filter(|h| cands.contains(h));
            if cands.len() == 1 {
                slots[p] = Some(cands[0]);
                played.push(cands[0]);
            } else {
                slots[p] = kept;
                let additions = build_additions(&u, &played, &pool, 1);
                played.push(additions[0]);
            }
        }

        debug_assert_eq!(played.len(), self.k);
        played.sort_unstable();
        debug_assert!(played.windows(2).all(|w| w[0] < w[1]));

        let order = env
            .sample_top_m(&played, self.k, rng)
            .expect("played set is always a valid non-empty subset");
        let feedback = RankingFeedback::new(played.clone(), order, self.n)
            .expect("sampled ranking is always consistent with the played set");
        self.stats
            .record_all(&rank_break(&feedback))
            .expect("rank-broken outcomes are always valid duels");
        self.stats.set_round(t);
        self.slots = slots.clone();
        self.t = t + 1;

        RecRound { t, played, feedback, slots, slot_candidates, early_exit }
    }
}
