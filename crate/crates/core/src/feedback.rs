//! Ranking feedback and its decomposition into pairwise outcomes.
//!
//! A played round yields a top-m ranking of the offered set. Rank-breaking
//! turns it into duels: the item at each ranked position beats every offered
//! item that is not ranked at or before that position. Position m'' is the
//! last one that can contribute, where `m'' = min(m, |S| - 1)`, so a round
//! over a set of size `|S|` yields exactly `sum_{i=1..m''} (|S| - i) =
//! m''(2|S| - m'' - 1)/2` outcomes.

use crate::error::{Error, Result};
use crate::mnl::validate_subset;

/// One decomposed duel: `winner` beat `loser`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairwiseOutcome {
    pub winner: usize,
    pub loser: usize,
}

/// Top-m ranking feedback for one played subset.
///
/// `set` is the offered subset in ascending order; `order` lists the ranked
/// prefix from first to last choice. Invariants: `order` is non-empty,
/// duplicate-free, contained in `set`, and no longer than `set`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankingFeedback {
    set: Vec<usize>,
    order: Vec<usize>,
}

impl RankingFeedback {
    /// Validates and builds feedback from an offered set and a ranked prefix.
    ///
    /// Item indices must lie in `0..n`.
    pub fn new(set: Vec<usize>, order: Vec<usize>, n: usize) -> Result<Self> {
        validate_subset(&set, n)?;
        if order.is_empty() {
            return Err(Error::InvalidRanking("ranking must be non-empty".to_string()));
        }
        if order.len() > set.len() {
            return Err(Error::InvalidRanking(format!(
                "ranking length {} exceeds played set size {}",
                order.len(),
                set.len()
            )));
        }
        let mut sorted_set = set;
        sorted_set.sort_unstable();
        let mut seen = Vec::with_capacity(order.len());
        for &item in &order {
            if sorted_set.binary_search(&item).is_err() {
                return Err(Error::InvalidRanking(format!(
                    "ranked item {item} is not in the played set"
                )));
            }
            if seen.contains(&item) {
                return Err(Error::InvalidRanking(format!("item {item} ranked twice")));
            }
            seen.push(item);
        }
        Ok(Self { set: sorted_set, order })
    }

    /// Offered subset, ascending.
    pub fn set(&self) -> &[usize] {
        &self.set
    }

    /// Ranked prefix, best first.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Number of pairwise outcomes rank-breaking will produce.
    pub fn pair_count(&self) -> usize {
        let k = self.set.len();
        let m = self.order.len().min(k - 1);
        m * (2 * k - m - 1) / 2
    }
}

/// Decomposes ranking feedback into pairwise outcomes.
///
/// For each ranked position `p` (1-based, up to `min(m, |S| - 1)`), the item
/// at `p` beats every member of the played set outside the first `p` ranked
/// items. Outcomes are emitted by rank position, then by loser index
/// ascending. A singleton set yields no outcomes.
pub fn rank_break(feedback: &RankingFeedback) -> Vec<PairwiseOutcome> {
    let set = feedback.set();
    let order = feedback.order();
    let positions = order.len().min(set.len() - 1);
    let mut outcomes = Vec::with_capacity(feedback.pair_count());
    let mut beaten = vec![false; set.len()];
    for &winner in order.iter().take(positions) {
        beaten[set.binary_search(&winner).unwrap()] = true;
        // Losers at this position: everything offered and not ranked at or
        // before it (later-ranked items included); `set` is ascending so
        // emission order is too.
        for (slot, &loser) in set.iter().enumerate() {
            if !beaten[slot] {
                outcomes.push(PairwiseOutcome { winner, loser });
            }
        }
    }
    outcomes
}
