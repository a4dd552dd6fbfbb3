//! Max-min UCB subset selection for the winner-regret objective.
//!
//! Each round the algorithm forms the candidate set of items whose pairwise
//! upper confidence bounds clear 1/2 against every rival. A persistent
//! one-item holding set tracks the emerging best item; the played set is the
//! holding (or a random candidate) plus `m` companions chosen greedily to
//! maximize their minimal bound against the set built so far, so feedback is
//! maximally informative about the incumbent. Feedback is a top-m ranking of
//! the played `m+1` items, rank-broken into duels.

use crate::error::{Error, Result};
use crate::feedback::{rank_break, RankingFeedback};
use crate::mnl::MnlInstance;
use crate::stats::{check_alpha, PairwiseStats};
use rand::Rng;

/// Items in `pool` whose bound against every other pool member exceeds 1/2.
///
/// `u` is a bound accessor (see [`PairwiseStats::ucb_matrix`]); `pool` must be
/// duplicate-free. The result preserves `pool` order.
pub fn candidate_set_with(u: impl Fn(usize, usize) -> f64, pool: &[usize]) -> Vec<usize> {
    pool.iter()
        .copied()
        .filter(|&i| pool.iter().all(|&j| j == i || u(i, j) > 0.5))
        .collect()
}

/// [`candidate_set_with`] backed by recorded statistics at round `t`.
pub fn candidate_set(
    stats: &PairwiseStats,
    pool: &[usize],
    t: u64,
    alpha: f64,
) -> Result<Vec<usize>> {
    check_alpha(alpha)?;
    if t == 0 {
        return Err(Error::InvalidParameter("round index t must be >= 1".to_string()));
    }
    for &i in pool {
        if i >= stats.n() {
            return Err(Error::IndexOutOfRange { index: i, n: stats.n() });
        }
    }
    let m = stats.ucb_matrix(t, alpha);
    Ok(candidate_set_with(|i, j| m.get(i, j), pool))
}

/// Greedily extends `seed` with exactly `ell` items drawn from `pool`.
///
/// Returns the union of `seed` and the additions, ascending. `seed` and
/// `pool` must be disjoint and `pool` must hold at least `ell` items.
///
/// Phase 1 repeatedly absorbs the pool's whole candidate set while it is
/// non-empty yet smaller than the remaining quota. Phase 2 fills one slot at
/// a time with the pool item maximizing its minimal bound against the set
/// built so far (against the rest of the pool while the set is still empty);
/// value ties prefer the lowest item index.
pub fn build_s(
    u: impl Fn(usize, usize) -> f64,
    seed: &[usize],
    pool: &[usize],
    ell: usize,
) -> Result<Vec<usize>> {
    if pool.len() < ell {
        return Err(Error::InsufficientPool { need: ell, available: pool.len() });
    }
    let mut pool_sorted = pool.to_vec();
    pool_sorted.sort_unstable();
    pool_sorted.dedup();
    if pool_sorted.len() != pool.len() {
        return Err(Error::InvalidSubset("pool contains duplicates".to_string()));
    }
    if seed.iter().any(|i| pool_sorted.binary_search(i).is_ok()) {
        return Err(Error::InvalidSubset(
            "seed and pool must be disjoint".to_string(),
        ));
    }
    let mut result = seed.to_vec();
    result.extend(build_additions(&u, seed, &pool_sorted, ell));
    result.sort_unstable();
    Ok(result)
}

/// Core of [`build_s`]: returns only the added items, in pick order.
/// `pool` must be ascending, disjoint from `seed`, and large enough.
pub(crate) fn build_additions(
    u: &impl Fn(usize, usize) -> f64,
    seed: &[usize],
    pool: &[usize],
    ell: usize,
) -> Vec<usize> {
    debug_assert!(pool.len() >= ell);
    debug_assert!(pool.windows(2).all(|w| w[0] < w[1]));
    let mut current: Vec<usize> = seed.to_vec();
    let mut pool: Vec<usize> = pool.to_vec();
    let mut added = Vec::with_capacity(ell);
    let mut remaining = ell;

    // Phase 1: absorb whole candidate sets while they fit strictly below the
    // quota; stop as soon as the candidate set is empty or can cover it.
    while remaining > 0 {
        let cands = candidate_set_with(&u, &pool);
        if cands.is_empty() || cands.len() >= remaining {
            break;
        }
        for &c in &cands {
            current.push(c);
            added.push(c);
        }
        pool.retain(|x| !cands.contains(x));
        remaining -= cands.len();
    }

    // Phase 2: one slot at a time by the max-min rule. `best[p]` caches the
    // minimal bound of pool[p] against `current` and is tightened as the set
    // grows; while `current` is empty the minimum runs over the rest of the
    // pool instead.
    if remaining > 0 {
        let min_against_current = |c: usize, current: &[usize], pool: &[usize]| -> f64 {
            if current.is_empty() {
                pool.iter()
                    .filter(|&&x| x != c)
                    .map(|&x| u(c, x))
                    .fold(f64::INFINITY, f64::min)
            } else {
                current.iter().map(|&x| u(c, x)).fold(f64::INFINITY, f64::min)
            }
        };
        let mut best: Vec<f64> = pool
            .iter()
            .map(|&c| min_against_current(c, &current, &pool))
            .collect();
        while remaining > 0 {
            let mut pick = 0;
            for p in 1..pool.len() {
                if best[p] > best[pick] {
                    pick = p;
                }
            }
            let item = pool.remove(pick);
            best.remove(pick);
            let was_empty = current.is_empty();
            current.push(item);
            added.push(item);
            remaining -= 1;
            if was_empty {
                // The empty-set convention no longer applies; rebase every
                // cached minimum on the one-item set.
                for (p, &c) in pool.iter().enumerate() {
                    best[p] = u(c, item);
                }
            } else {
                for (p, &c) in pool.iter().enumerate() {
                    best[p] = best[p].min(u(c, item));
                }
            }
        }
    }
    added
}

/// One played round of [`MaxMinUcb`].
#[derive(Debug, Clone)]
pub struct MaxMinRound {
    /// Round index (1-based).
    pub t: u64,
    /// Played subset, ascending; size `m + 1`, or 1 on singleton rounds.
    pub played: Vec<usize>,
    /// Observed top-m ranking feedback.
    pub feedback: RankingFeedback,
    /// Candidate set as defined over all items this round, before any
    /// empty-set reset.
    pub candidates: Vec<usize>,
    /// True when the candidate set was empty and play fell back to all items.
    pub candidates_reset: bool,
    /// Holding set after the round (at most one item).
    pub holding: Option<usize>,
    /// True when the round played the holding singleton and recorded nothing.
    pub singleton: bool,
}

/// Winner-objective subset bandit: optimistic candidate filtering plus
/// max-min companion selection around a persistent incumbent.
#[derive(Debug, Clone)]
pub struct MaxMinUcb {
    n: usize,
    k: usize,
    m: usize,
    alpha: f64,
    stats: PairwiseStats,
    holding: Option<usize>,
    t: u64,
}

impl MaxMinUcb {
    /// Requires `n >= 2`, `1 <= m`, `m + 1 <= k <= n`, and `alpha > 1/2`.
    /// `k` caps the played-set size; every non-singleton round plays `m + 1`.
    pub fn new(n: usize, k: usize, m: usize, alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if m == 0 {
            return Err(Error::InvalidParameter("m must be >= 1".to_string()));
        }
        if k > n {
            return Err(Error::InvalidParameter(format!(
                "k = {k} exceeds the number of items n = {n}"
            )));
        }
        if m + 1 > k {
            return Err(Error::InvalidParameter(format!(
                "need m + 1 <= k to play m+1 items, got m = {m}, k = {k}"
            )));
        }
        Ok(Self { n, k, m, alpha, stats: PairwiseStats::new(n)?, holding: None, t: 1 })
    }

    /// Number of items.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Maximum allowed subset size.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Feedback prefix length.
    pub fn m(&self) -> usize {
        self.m
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

    /// Current holding set (at most one item).
    pub fn holding(&self) -> Option<usize> {
        self.holding
    }

    /// Plays one round against `env` and records the rank-broken feedback.
    pub fn step(&mut self, env: &MnlInstance, rng: &mut impl Rng) -> MaxMinRound {
        assert_eq!(env.n(), self.n, "environment size mismatch");
        let t = self.t;
        let ucb = self.stats.ucb_matrix(t, self.alpha);
        let u = |i, j| ucb.get(i, j);
        let all: Vec<usize> = (0..self.n).collect();

        let candidates = candidate_set_with(u, &all);
        // The holding set survives only while its item stays a candidate.
        let mut holding = self.holding.filter(|h| candidates.contains(h));
        let candidates_reset = candidates.is_empty();
        let effective: &[usize] = if candidates_reset { &all } else { &candidates };

        let (played, singleton) = if effective.len() == 1 {
            holding = Some(effective[0]);
            (vec![effective[0]], true)
        } else {
            let seed = match holding {
                Some(h) => h,
                None => effective[rng.random_range(0..effective.len())],
            };
            let pool: Vec<usize> = (0..self.n).filter(|&x| x != seed).collect();
            let mut played = vec![seed];
            played.extend(build_additions(&u, &[seed], &pool, self.m));
            played.sort_unstable();
            (played, false)
        };

        let order = env
            .sample_top_m(&played, self.m, rng)
            .expect("played set is always a valid non-empty subset");
        let feedback = RankingFeedback::new(played.clone(), order, self.n)
            .expect("sampled ranking is always consistent with the played set");
        self.stats
            .record_all(&rank_break(&feedback))
            .expect("rank-broken outcomes are always valid duels");
        self.stats.set_round(t);
        self.holding = holding;
        self.t = t + 1;

        MaxMinRound {
            t,
            played,
            feedback,
            candidates,
            candidates_reset,
            holding,
            singleton,
        }
    }
}
