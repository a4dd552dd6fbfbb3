//! Multinomial-logit (Plackett-Luce) choice model over a fixed item universe.
//!
//! An instance is a vector of positive weights `theta`. Offered a subset `S`,
//! the model picks item `i` with probability `theta_i / sum_{j in S} theta_j`;
//! a top-m ranking is produced by repeating that draw on the survivors.
//! All probabilities are invariant under positive rescaling of `theta`.
//!
//! Items are 0-indexed throughout the library; 1-indexing appears only at the
//! CLI and file-format boundary.

use crate::error::{Error, Result};
use rand::Rng;

/// Immutable choice-model instance: `n` items with positive weights.
#[derive(Debug, Clone, PartialEq)]
pub struct MnlInstance {
    theta: Vec<f64>,
    /// Item indices sorted by descending weight, ties by lowest index.
    order_desc: Vec<usize>,
}

impl MnlInstance {
    /// Builds an instance from a weight vector.
    ///
    /// Requires `n >= 2` and every weight finite and strictly positive.
    pub fn new(theta: Vec<f64>) -> Result<Self> {
        if theta.len() < 2 {
            return Err(Error::InvalidInstance(format!(
                "need at least 2 items, got {}",
                theta.len()
            )));
        }
        for (i, &w) in theta.iter().enumerate() {
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::InvalidInstance(format!(
                    "weight of item {i} must be finite and > 0, got {w}"
                )));
            }
        }
        let mut order_desc: Vec<usize> = (0..theta.len()).collect();
        order_desc.sort_by(|&a, &b| theta[b].partial_cmp(&theta[a]).unwrap().then(a.cmp(&b)));
        Ok(Self { theta, order_desc })
    }

    /// Number of items.
    pub fn n(&self) -> usize {
        self.theta.len()
    }

    /// Weight vector, indexed by item.
    pub fn theta(&self) -> &[f64] {
        &self.theta
    }

    /// Weight of one item.
    pub fn weight(&self, i: usize) -> f64 {
        self.theta[i]
    }

    /// Item indices sorted by descending weight, ties by lowest index.
    pub fn order_desc(&self) -> &[usize] {
        &self.order_desc
    }

    /// Returns a copy with every weight multiplied by `c > 0`.
    ///
    /// All choice and ranking probabilities are unchanged by this.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "scale factor must be finite and > 0, got {c}"
            )));
        }
        MnlInstance::new(self.theta.iter().map(|w| w * c).collect())
    }

    /// The single best item (largest weight, ties by lowest index).
    pub fn best_item(&self) -> usize {
        self.order_desc[0]
    }

    /// Weight gap of item `i` to the best item.
    pub fn winner_gap(&self, i: usize) -> Result<f64> {
        self.check_index(i)?;
        Ok(self.theta[self.best_item()] - self.theta[i])
    }

    /// The `k` items of largest weight, as an ascending index set.
    ///
    /// Weight ties are broken by lowest index.
    pub fn top_k_set(&self, k: usize) -> Result<Vec<usize>> {
        if k == 0 || k > self.n() {
            return Err(Error::InvalidParameter(format!(
                "k must be in 1..={}, got {k}",
                self.n()
            )));
        }
        let mut set: Vec<usize> = self.order_desc[..k].to_vec();
        set.sort_unstable();
        Ok(set)
    }

    /// Gap between the k-th and (k+1)-th largest weights; `0.0` when tied.
    ///
    /// A zero gap does not make the instance invalid, but top-k selection is
    /// then non-unique; see [`MnlInstance::is_degenerate_for_top_k`].
    pub fn gap_k(&self, k: usize) -> Result<f64> {
        if k == 0 || k >= self.n() {
            return Err(Error::InvalidParameter(format!(
                "k must be in 1..={} for a k-th gap, got {k}",
                self.n() - 1
            )));
        }
        Ok(self.theta[self.order_desc[k - 1]] - self.theta[self.order_desc[k]])
    }

    /// True when the k-th gap is zero, i.e. the optimal size-k set is tied.
    pub fn is_degenerate_for_top_k(&self, k: usize) -> Result<bool> {
        Ok(self.gap_k(k)? == 0.0)
    }

    /// Probability that `i` beats `j` in a pairwise offer: `theta_i / (theta_i + theta_j)`.
    pub fn pair_prob(&self, i: usize, j: usize) -> Result<f64> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Err(Error::SelfComparison(i));
        }
        Ok(self.theta[i] / (self.theta[i] + self.theta[j]))
    }

    /// Probability that item `i` is chosen from the offered subset `s`.
    ///
    /// Returns `0.0` for a valid item not contained in `s`.
    pub fn choice_prob(&self, i: usize, s: &[usize]) -> Result<f64> {
        self.check_subset(s)?;
        self.check_index(i)?;
        if !s.contains(&i) {
            return Ok(0.0);
        }
        let total: f64 = s.iter().map(|&j| self.theta[j]).sum();
        Ok(self.theta[i] / total)
    }

    /// Probability of observing the top-m ranking `order` from offer `s`.
    ///
    /// `order` must list between 1 and `|s|` distinct members of `s`; its
    /// probability is the product of successive choice probabilities over the
    /// shrinking survivor set.
    pub fn ranking_prob(&self, order: &[usize], s: &[usize]) -> Result<f64> {
        self.check_subset(s)?;
        check_order_against_set(order, s)?;
        let mut remaining_total: f64 = s.iter().map(|&j| self.theta[j]).sum();
        let mut prob = 1.0;
        for &item in order {
            prob *= self.theta[item] / remaining_total;
            remaining_total -= self.theta[item];
        }
        Ok(prob)
    }

    /// Draws a top-m ranking from offer `s`: m successive winner draws
    /// without replacement (clamped to `|s|` when `m > |s|`).
    ///
    /// When a single candidate remains for a position it is emitted without
    /// consuming randomness, so a full ranking of `|s|` items costs exactly
    /// `|s| - 1` draws.
    pub fn sample_top_m(&self, s: &[usize], m: usize, rng: &mut impl Rng) -> Result<Vec<usize>> {
        self.check_subset(s)?;
        if m == 0 {
            return Err(Error::InvalidParameter(
                "ranking length m must be >= 1".to_string(),
            ));
        }
        let m_eff = m.min(s.len());
        let mut remaining: Vec<usize> = s.to_vec();
        remaining.sort_unstable();
        let mut order = Vec::with_capacity(m_eff);
        for _ in 0..m_eff {
            let pick_pos = if remaining.len() == 1 {
                0
            } else {
                let total: f64 = remaining.iter().map(|&j| self.theta[j]).sum();
                let target = rng.random::<f64>() * total;
                let mut acc = 0.0;
                let mut pos = remaining.len() - 1;
                for (p, &j) in remaining.iter().enumerate() {
                    acc += self.theta[j];
                    if target < acc {
                        pos = p;
                        break;
                    }
                }
                pos
            };
            order.push(remaining.remove(pick_pos));
        }
        Ok(order)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.n() {
            return Err(Error::IndexOutOfRange { index: i, n: self.n() });
        }
        Ok(())
    }

    fn check_subset(&self, s: &[usize]) -> Result<()> {
        validate_subset(s, self.n())
    }
}

/// Checks that `s` is a non-empty duplicate-free subset of `0..n`.
pub fn validate_subset(s: &[usize], n: usize) -> Result<()> {
    if s.is_empty() {
        return Err(Error::InvalidSubset("subset must be non-empty".to_string()));
    }
    let mut seen = vec![false; n];
    for &i in s {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        if seen[i] {
            return Err(Error::InvalidSubset(format!("duplicate item {i}")));
        }
        seen[i] = true;
    }
    Ok(())
}

fn check_order_against_set(order: &[usize], s: &[usize]) -> Result<()> {
    if order.is_empty() {
        return Err(Error::InvalidRanking("ranking must be non-empty".to_string()));
    }
    if order.len() > s.len() {
        return Err(Error::InvalidRanking(format!(
            "ranking length {} exceeds offered set size {}",
            order.len(),
            s.len()
        )));
    }
    let mut seen = Vec::with_capacity(order.len());
    for &item in order {
        if !s.contains(&item) {
            return Err(Error::InvalidRanking(format!(
                "ranked item {item} is not in the offered set"
            )));
        }
        if seen.contains(&item) {
            return Err(Error::InvalidRanking(format!("item {item} ranked twice")));
        }
        seen.push(item);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn g1_like() -> MnlInstance {
        let mut theta = vec![0.2; 16];
        theta[0] = 0.8;
        MnlInstance::new(theta).unwrap()
    }

    #[test]
    fn construction_rejects_bad_weights() {
        assert!(MnlInstance::new(vec![1.0]).is_err());
        assert!(MnlInstance::new(vec![]).is_err());
        assert!(MnlInstance::new(vec![1.0, 0.0]).is_err());
        assert!(MnlInstance::new(vec![1.0, -0.5]).is_err());
        assert!(MnlInstance::new(vec![1.0, f64::NAN]).is_err());
        assert!(MnlInstance::new(vec![1.0, f64::INFINITY]).is_err());
        assert!(MnlInstance::new(vec![1.0, 0.5]).is_ok());
    }

    #[test]
    fn choice_prob_matches_hand_values() {
        let inst = g1_like();
        // Best item against one rival: 0.8 / (0.8 + 0.2).
        assert_abs_diff_eq!(inst.choice_prob(0, &[0, 1]).unwrap(), 0.8, epsilon = 1e-12);
        // Singleton offer is deterministic.
        assert_abs_diff_eq!(inst.choice_prob(3, &[3]).unwrap(), 1.0, epsilon = 1e-15);
        // Valid item outside the offer.
        assert_eq!(inst.choice_prob(5, &[0, 1]).unwrap(), 0.0);
        // Uniform weights give a uniform choice.
        let uni = MnlInstance::new(vec![0.3; 4]).unwrap();
        for i in 0..4 {
            assert_abs_diff_eq!(
                uni.choice_prob(i, &[0, 1, 2, 3]).unwrap(),
                0.25,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn choice_prob_rejects_bad_arguments() {
        let inst = g1_like();
        assert!(matches!(
            inst.choice_prob(0, &[]),
            Err(Error::InvalidSubset(_))
        ));
        assert!(matches!(
            inst.choice_prob(0, &[1, 1]),
            Err(Error::InvalidSubset(_))
        ));
        assert!(matches!(
            inst.choice_prob(99, &[0, 1]),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            inst.choice_prob(0, &[0, 99]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn ranking_prob_matches_hand_values() {
        let inst = g1_like();
        // Two-item offer, best first: just the choice probability.
        assert_abs_diff_eq!(
            inst.ranking_prob(&[0, 1], &[0, 1]).unwrap(),
            0.8 * 1.0,
            epsilon = 1e-12
        );
        // Weak item wins, then the best of the survivors:
        // (0.2 / 1.2) * (0.8 / 1.0).
        assert_abs_diff_eq!(
            inst.ranking_prob(&[1, 0], &[0, 1, 2]).unwrap(),
            (0.2 / 1.2) * (0.8 / 1.0),
            epsilon = 1e-12
        );
        // Uniform 3-item offer: every length-2 prefix has probability 1/6.
        let uni = MnlInstance::new(vec![2.0; 3]).unwrap();
        assert_abs_diff_eq!(
            uni.ranking_prob(&[2, 0], &[0, 1, 2]).unwrap(),
            1.0 / 6.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn ranking_prob_rejects_bad_rankings() {
        let inst = g1_like();
        assert!(matches!(
            inst.ranking_prob(&[], &[0, 1]),
            Err(Error::InvalidRanking(_))
        ));
        assert!(matches!(
            inst.ranking_prob(&[0, 0], &[0, 1]),
            Err(Error::InvalidRanking(_))
        ));
        assert!(matches!(
            inst.ranking_prob(&[2], &[0, 1]),
            Err(Error::InvalidRanking(_))
        ));
        assert!(matches!(
            inst.ranking_prob(&[0, 1, 2], &[0, 1]),
            Err(Error::InvalidRanking(_))
        ));
    }

    #[test]
    fn sample_top_m_respects_singletons_and_clamps() {
        let inst = g1_like();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(inst.sample_top_m(&[4], 1, &mut rng).unwrap(), vec![4]);
        assert_eq!(inst.sample_top_m(&[4], 3, &mut rng).unwrap(), vec![4]);
        // m larger than the set clamps to a full ranking.
        let full = inst.sample_top_m(&[0, 1, 2], 10, &mut rng).unwrap();
        let mut sorted = full.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 2]);
        assert!(matches!(
            inst.sample_top_m(&[0, 1], 0, &mut rng),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn sample_top_m_is_deterministic_per_seed() {
        let inst = g1_like();
        let s = [0, 3, 7, 11];
        let a = inst
            .sample_top_m(&s, 2, &mut ChaCha8Rng::seed_from_u64(42))
            .unwrap();
        let b = inst
            .sample_top_m(&s, 2, &mut ChaCha8Rng::seed_from_u64(42))
            .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sample_top_m_winner_frequency_tracks_choice_prob() {
        let inst = g1_like();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let draws = 100_000;
        let mut wins = 0u64;
        for _ in 0..draws {
            if inst.sample_top_m(&[0, 1], 1, &mut rng).unwrap()[0] == 0 {
                wins += 1;
            }
        }
        let freq = wins as f64 / draws as f64;
        assert!((freq - 0.8).abs() < 0.01, "winner frequency {freq} too far from 0.8");
    }

    #[test]
    fn stats_track_sorted_weights() {
        let inst = g1_like();
        assert_eq!(inst.best_item(), 0);
        assert_abs_diff_eq!(inst.winner_gap(1).unwrap(), 0.6, epsilon = 1e-12);
        assert_eq!(inst.winner_gap(0).unwrap(), 0.0);
        assert_eq!(inst.top_k_set(3).unwrap(), vec![0, 1, 2]);
        // Ties break toward the lowest index.
        let tied = MnlInstance::new(vec![0.5, 0.9, 0.9, 0.5]).unwrap();
        assert_eq!(tied.best_item(), 1);
        assert_eq!(tied.top_k_set(3).unwrap(), vec![0, 1, 2]);
        assert_eq!(tied.gap_k(1).unwrap(), 0.0);
        assert_abs_diff_eq!(tied.gap_k(2).unwrap(), 0.4, epsilon = 1e-12);
        assert!(tied.is_degenerate_for_top_k(1).unwrap());
        assert!(!tied.is_degenerate_for_top_k(2).unwrap());
        // Increasing-weight layout must sort, not trust index order.
        let increasing = MnlInstance::new(vec![0.1, 0.2, 0.9, 0.4]).unwrap();
        assert_eq!(increasing.best_item(), 2);
        assert_eq!(increasing.top_k_set(2).unwrap(), vec![2, 3]);
        assert_abs_diff_eq!(increasing.gap_k(2).unwrap(), 0.2, epsilon = 1e-12);
        assert!(increasing.gap_k(4).is_err());
        assert!(increasing.gap_k(0).is_err());
    }

    #[test]
    fn pair_prob_basics() {
        let inst = g1_like();
        assert_abs_diff_eq!(inst.pair_prob(0, 1).unwrap(), 0.8, epsilon = 1e-12);
        assert_abs_diff_eq!(
            inst.pair_prob(0, 1).unwrap() + inst.pair_prob(1, 0).unwrap(),
            1.0,
            epsilon = 1e-12
        );
        assert!(matches!(inst.pair_prob(2, 2), Err(Error::SelfComparison(2))));
    }

    #[test]
    fn scaling_preserves_probabilities_and_scales_gaps() {
        let inst = g1_like();
        let scaled = inst.scaled(5.0).unwrap();
        assert_abs_diff_eq!(
            scaled.choice_prob(0, &[0, 1]).unwrap(),
            inst.choice_prob(0, &[0, 1]).unwrap(),
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(scaled.winner_gap(1).unwrap(), 3.0, epsilon = 1e-12);
        assert_eq!(scaled.best_item(), inst.best_item());
        assert!(inst.scaled(0.0).is_err());
        assert!(inst.scaled(-1.0).is_err());
        assert!(inst.scaled(f64::NAN).is_err());
    }

    proptest! {
        #[test]
        fn choice_probs_sum_to_one(
            theta in prop::collection::vec(0.01f64..10.0, 2..10),
            subset_mask in 1u32..1024,
        ) {
            let inst = MnlInstance::new(theta).unwrap();
            let s: Vec<usize> = (0..inst.n()).filter(|i| subset_mask & (1 << i) != 0).collect();
            prop_assume!(!s.is_empty());
            let total: f64 = s
                .iter()
                .map(|&i| inst.choice_prob(i, &s).unwrap())
                .sum();
            prop_assert!((total - 1.0).abs() < 1e-12);
        }

        #[test]
        fn choice_is_independent_of_irrelevant_alternatives(
            theta in prop::collection::vec(0.01f64..10.0, 4..10),
        ) {
            // Relative odds of items 0 and 1 are the same in any offer
            // containing both.
            let inst = MnlInstance::new(theta).unwrap();
            let small = [0, 1];
            let large: Vec<usize> = (0..inst.n()).collect();
            let ratio_small = inst.choice_prob(0, &small).unwrap() / inst.choice_prob(1, &small).unwrap();
            let ratio_large = inst.choice_prob(0, &large).unwrap() / inst.choice_prob(1, &large).unwrap();
            prop_assert!((ratio_small - ratio_large).abs() < 1e-10 * ratio_small.abs().max(1.0));
        }

        #[test]
        fn scaling_leaves_ranking_probs_unchanged(
            theta in prop::collection::vec(0.01f64..10.0, 3..8),
            c in 0.01f64..100.0,
        ) {
            let inst = MnlInstance::new(theta).unwrap();
            let scaled = inst.scaled(c).unwrap();
            let s: Vec<usize> = (0..inst.n()).collect();
            let order = [1usize, 0];
            let a = inst.ranking_prob(&order, &s).unwrap();
            let b = scaled.ranking_prob(&order, &s).unwrap();
            prop_assert!((a - b).abs() < 1e-12);
        }
    }
}
