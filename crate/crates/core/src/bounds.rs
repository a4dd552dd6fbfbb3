//! Regret-bound constants for a known instance.
//!
//! Everything here is a closed-form function of the weights and the
//! algorithm parameters: lower-bound coefficients (the floor any algorithm
//! pays), the per-pair round counts a confidence-bound learner needs to
//! settle its duels, and the constant and log-coefficient of the matching
//! upper bounds. Degenerate instances (tied weights where a formula divides
//! by a gap) yield infinities plus an explicit flag rather than errors.

use crate::error::{Error, Result};
use crate::mnl::MnlInstance;
use crate::stats::check_alpha;
use std::fmt::Write as _;

/// Closed-form bound constants for one instance and parameter choice.
///
/// Item-indexed vectors follow the instance's original indexing; rendered
/// output is 1-based.
#[derive(Debug, Clone)]
pub struct BoundsReport {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub alpha: f64,
    pub delta: f64,
    /// Best item (lowest index on ties), 0-based.
    pub best_item: usize,
    /// Another item ties the best weight: winner-objective constants blow up.
    pub degenerate_winner: bool,
    /// The k-th and (k+1)-th weights tie: top-k constants blow up.
    pub degenerate_topk: bool,
    /// A tie involving a top-k weight breaks the full-ranking round counts.
    pub degenerate_ranking: bool,

    /// Winner-objective regret floor coefficient.
    pub winner_lower: f64,
    /// The same floor when rounds reveal a top-m ranking instead of a winner.
    pub winner_lower_topm: f64,
    /// Equivalent floor expressed through the best item's smallest win margin.
    pub winner_lower_pairwise: f64,
    /// Top-k objective regret floor coefficient.
    pub topk_lower: f64,

    /// Rounds after which every pairwise confidence bound holds with
    /// probability at least `1 - delta`. Overflows to infinity for alpha
    /// close to 1/2.
    pub confidence_horizon: f64,

    /// Weight shortfall of each item against the best.
    pub weight_gap: Vec<f64>,
    pub weight_gap_max: f64,
    /// Best item's win probability against each item, minus 1/2.
    pub win_margin: Vec<f64>,
    /// Rounds needed to settle each item's duel with the best
    /// (`4 alpha / margin^2`); infinite for the best item itself and ties.
    pub pair_rounds: Vec<f64>,
    /// Largest finite-duel requirement among suboptimal items.
    pub pair_rounds_max: f64,
    /// Duel requirement summed over every item pair.
    pub pair_rounds_total: f64,

    /// Constant term of the winner-objective high-probability upper bound.
    pub winner_upper_constant: f64,
    /// Coefficient of `ln T` in the same bound.
    pub winner_upper_log_coeff: f64,
    /// Constant term of the expectation version; finite only for alpha > 1.
    pub winner_upper_constant_expected: f64,

    /// Per-round cost of playing the k worst items instead of the k best.
    pub topk_weight_gap_max: f64,
    /// For each item outside the best k (0-based), its worst-case win-margin
    /// deficit against the k-th best item across the top k-1 reference items.
    pub challenger_margin: Vec<(usize, f64)>,
    /// Coefficient of `ln T` in the top-k upper bound.
    pub topk_upper_log_coeff: f64,
    /// Duel requirement summed over all rank positions' obstruction pairs.
    pub ranking_rounds_total: f64,
    /// Constant term of the top-k high-probability upper bound.
    pub topk_upper_constant: f64,
}

/// Duel requirement charged to rank position `g` for the pair `(i, j)`.
///
/// Pairs strictly better than `g`'s weight on both ends (neither being `g`)
/// are outside the position's obstruction set and contribute nothing. Ties
/// with `g`'s weight collapse onto `g`'s own row and divide by a zero
/// margin, yielding infinity.
fn obstruction_pair(inst: &MnlInstance, alpha: f64, g: usize, i: usize, j: usize) -> f64 {
    debug_assert_ne!(i, j);
    let p = |a: usize, b: usize| inst.pair_prob(a, b).expect("indices are in range");
    let tg = inst.weight(g);
    if i == g || j == g {
        let other = if i == g { j } else { i };
        let d = p(g, other) - 0.5;
        return 4.0 * alpha / (d * d);
    }
    if inst.weight(i) == tg {
        let d = p(g, j) - 0.5;
        return 4.0 * alpha / (d * d);
    }
    if inst.weight(j) == tg {
        let d = p(g, i) - 0.5;
        return 4.0 * alpha / (d * d);
    }
    let i_better = inst.weight(i) > tg;
    let j_better = inst.weight(j) > tg;
    match (i_better, j_better) {
        (true, true) => 0.0,
        (false, false) => {
            let di = p(g, i) - 0.5;
            let dj = p(g, j) - 0.5;
            4.0 * alpha / di.min(dj).powi(2)
        }
        _ => {
            let (b, w) = if i_better { (i, j) } else { (j, i) };
            let d = p(g, b) - p(w, b);
            4.0 * alpha / (d * d)
        }
    }
}

impl BoundsReport {
    /// Requires `1 <= k <= n - 1`, `1 <= m <= n - 1`, `alpha > 1/2`, and
    /// `delta` strictly inside (0, 1).
    pub fn compute(
        inst: &MnlInstance,
        k: usize,
        m: usize,
        alpha: f64,
        delta: f64,
    ) -> Result<Self> {
        check_alpha(alpha)?;
        let n = inst.n();
        if k == 0 || k >= n {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= k <= n - 1, got k = {k}, n = {n}"
            )));
        }
        if m == 0 || m >= n {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= m <= n - 1, got m = {m}, n = {n}"
            )));
        }
        if !(delta > 0.0 && delta < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "delta must lie strictly in (0, 1), got {delta}"
            )));
        }

        let best = inst.best_item();
        let t_star = inst.weight(best);
        let sorted = inst.order_desc();
        let second = inst.weight(sorted[1]);
        let degenerate_winner = second == t_star;

        let winner_lower = t_star * (n - 1) as f64 / (t_star / second - 1.0);
        let winner_lower_topm = winner_lower / m as f64;

        let weight_gap: Vec<f64> = (0..n).map(|i| t_star - inst.weight(i)).collect();
        let weight_gap_max = weight_gap.iter().cloned().fold(0.0, f64::max);
        let win_margin: Vec<f64> = (0..n)
            .map(|i| {
                if i == best {
                    0.0
                } else {
                    inst.pair_prob(best, i).expect("index in range") - 0.5
                }
            })
            .collect();
        let pair_rounds: Vec<f64> = (0..n)
            .map(|i| {
                if i == best {
                    f64::INFINITY
                } else {
                    4.0 * alpha / (win_margin[i] * win_margin[i])
                }
            })
            .collect();
        let min_margin = (0..n)
            .filter(|&i| i != best)
            .map(|i| win_margin[i])
            .fold(f64::INFINITY, f64::min);
        let winner_lower_pairwise = t_star * (n - 1) as f64 / (4.0 * min_margin);
        let pair_rounds_max = (0..n)
            .filter(|&i| i != best)
            .map(|i| pair_rounds[i])
            .fold(0.0, f64::max);
        let mut pair_rounds_total = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                let d = if i == best || j == best {
                    pair_rounds[if i == best { j } else { i }]
                } else {
                    pair_rounds[i].max(pair_rounds[j])
                };
                pair_rounds_total += d;
            }
        }

        let gap_k = inst.gap_k(k)?;
        let degenerate_topk = gap_k == 0.0;
        let topk_lower =
            t_star * inst.weight(sorted[k]) / gap_k * (n - k) as f64 / k as f64;

        let confidence_horizon = (2.0 * alpha * (n * n) as f64 / ((2.0 * alpha - 1.0) * delta))
            .powf(1.0 / (2.0 * alpha - 1.0));

        let log_terms = |rounds: f64| {
            if rounds == 0.0 {
                0.0
            } else {
                2.0 * rounds * (2.0 * rounds).ln()
            }
        };
        let winner_upper_constant = if weight_gap_max == 0.0 {
            0.0
        } else {
            (2.0 * confidence_horizon + log_terms(pair_rounds_total)) * weight_gap_max
        };
        let winner_upper_log_coeff = (0..n)
            .filter(|&i| i != best && weight_gap[i] > 0.0)
            .map(|i| {
                let rounds = if m == 1 { pair_rounds[i] } else { pair_rounds_max };
                weight_gap[i] * rounds / (m + 1) as f64
            })
            .sum();
        let winner_upper_constant_expected = if weight_gap_max == 0.0 {
            0.0
        } else if alpha <= 1.0 {
            f64::INFINITY
        } else {
            let head = 2.0
                * (2.0 * alpha * (n * n) as f64 / (2.0 * alpha - 1.0))
                    .powf(1.0 / (2.0 * alpha - 1.0))
                * (2.0 * alpha - 1.0)
                / (alpha - 1.0);
            (head + log_terms(pair_rounds_total)) * weight_gap_max
        };

        let top_sum: f64 = sorted[..k].iter().map(|&i| inst.weight(i)).sum();
        let bottom_sum: f64 = sorted[n - k..].iter().map(|&i| inst.weight(i)).sum();
        let topk_weight_gap_max = (top_sum - bottom_sum) / k as f64;

        let kth = sorted[k - 1];
        let t_kth = inst.weight(kth);
        let p = |a: usize, b: usize| inst.pair_prob(a, b).expect("indices are in range");
        let challenger_margin: Vec<(usize, f64)> = sorted[k..]
            .iter()
            .map(|&b| {
                let margin = sorted[..k.saturating_sub(1)]
                    .iter()
                    .map(|&g| p(kth, g) - p(b, g))
                    .fold(f64::INFINITY, f64::min);
                (b, margin)
            })
            .collect();
        let topk_upper_log_coeff = 4.0 * alpha / k as f64
            * challenger_margin
                .iter()
                .filter(|&&(b, _)| t_kth - inst.weight(b) > 0.0)
                .map(|&(b, margin)| (t_kth - inst.weight(b)) / (margin * margin))
                .sum::<f64>();

        let mut ranking_rounds_total = 0.0;
        for pos in 0..k {
            let r = sorted[pos];
            let tr = inst.weight(r);
            for &j in sorted[..k].iter().filter(|&&j| inst.weight(j) >= tr) {
                for i in (0..n).filter(|&i| i != j) {
                    ranking_rounds_total += obstruction_pair(inst, alpha, r, i, j);
                }
            }
        }
        let degenerate_ranking = ranking_rounds_total.is_infinite();
        let topk_upper_constant = if topk_weight_gap_max == 0.0 {
            0.0
        } else {
            (2.0 * confidence_horizon + log_terms(ranking_rounds_total)) * topk_weight_gap_max
        };

        Ok(Self {
            n,
            k,
            m,
            alpha,
            delta,
            best_item: best,
            degenerate_winner,
            degenerate_topk,
            degenerate_ranking,
            winner_lower,
            winner_lower_topm,
            winner_lower_pairwise,
            topk_lower,
            confidence_horizon,
            weight_gap,
            weight_gap_max,
            win_margin,
            pair_rounds,
            pair_rounds_max,
            pair_rounds_total,
            winner_upper_constant,
            winner_upper_log_coeff,
            winner_upper_constant_expected,
            topk_weight_gap_max,
            challenger_margin,
            topk_upper_log_coeff,
            ranking_rounds_total,
            topk_upper_constant,
        })
    }

    /// Plain-text report: scalar `key = value` lines, then per-item and
    /// per-challenger tables. Item ids are 1-based.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n = {}", self.n);
        let _ = writeln!(out, "k = {}", self.k);
        let _ = writeln!(out, "m = {}", self.m);
        let _ = writeln!(out, "alpha = {}", self.alpha);
        let _ = writeln!(out, "delta = {}", self.delta);
        let _ = writeln!(out, "best_item = {}", self.best_item + 1);
        let _ = writeln!(out, "degenerate_winner = {}", self.degenerate_winner);
        let _ = writeln!(out, "degenerate_topk = {}", self.degenerate_topk);
        let _ = writeln!(out, "degenerate_ranking = {}", self.degenerate_ranking);
        let _ = writeln!(out, "winner_lower = {}", self.winner_lower);
        let _ = writeln!(out, "winner_lower_topm = {}", self.winner_lower_topm);
        let _ = writeln!(out, "winner_lower_pairwise = {}", self.winner_lower_pairwise);
        let _ = writeln!(out, "topk_lower = {}", self.topk_lower);
        let _ = writeln!(out, "confidence_horizon = {}", self.confidence_horizon);
        let _ = writeln!(out, "weight_gap_max = {}", self.weight_gap_max);
        let _ = writeln!(out, "pair_rounds_max = {}", self.pair_rounds_max);
        let _ = writeln!(out, "pair_rounds_total = {}", self.pair_rounds_total);
        let _ = writeln!(out, "winner_upper_constant = {}", self.winner_upper_constant);
        let _ = writeln!(out, "winner_upper_log_coeff = {}", self.winner_upper_log_coeff);
        let _ = writeln!(
            out,
            "winner_upper_constant_expected = {}",
            self.winner_upper_constant_expected
        );
        let _ = writeln!(out, "topk_weight_gap_max = {}", self.topk_weight_gap_max);
        let _ = writeln!(out, "topk_upper_log_coeff = {}", self.topk_upper_log_coeff);
        let _ = writeln!(out, "ranking_rounds_total = {}", self.ranking_rounds_total);
        let _ = writeln!(out, "topk_upper_constant = {}", self.topk_upper_constant);
        let _ = writeln!(out);
        let _ = writeln!(out, "item,weight_gap,win_margin,pair_rounds");
        for i in 0..self.n {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                i + 1,
                self.weight_gap[i],
                self.win_margin[i],
                self.pair_rounds[i]
            );
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "challenger,margin");
        for &(b, margin) in &self.challenger_margin {
            let _ = writeln!(out, "{},{}", b + 1, margin);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn two_groups() -> MnlInstance {
        let mut theta = vec![0.2; 16];
        theta[0] = 0.8;
        MnlInstance::new(theta).unwrap()
    }

    fn geometric(n: usize, ratio: f64) -> MnlInstance {
        MnlInstance::new((0..n).map(|i| ratio.powi(i as i32)).collect()).unwrap()
    }

    fn plateaus() -> MnlInstance {
        let mut theta = vec![0.01; 16];
        theta[0] = 1.0;
        for t in theta.iter_mut().take(6).skip(1) {
            *t = 0.7;
        }
        for t in theta.iter_mut().take(11).skip(6) {
            *t = 0.5;
        }
        MnlInstance::new(theta).unwrap()
    }

    #[test]
    fn winner_floor_for_the_two_group_instance() {
        let r = BoundsReport::compute(&two_groups(), 5, 1, 0.51, 0.1).unwrap();
        assert_relative_eq!(r.winner_lower, 4.0, max_relative = 1e-12);
        let r = BoundsReport::compute(&two_groups(), 6, 5, 0.51, 0.1).unwrap();
        assert_relative_eq!(r.winner_lower_topm, 0.8, max_relative = 1e-12);
    }

    #[test]
    fn winner_floor_for_geometric_and_plateau_instances() {
        let r = BoundsReport::compute(&geometric(16, 0.8), 5, 1, 0.51, 0.1).unwrap();
        assert_relative_eq!(r.winner_lower, 60.0, max_relative = 1e-9);
        let r = BoundsReport::compute(&plateaus(), 6, 1, 0.51, 0.1).unwrap();
        assert_relative_eq!(r.winner_lower, 35.0, max_relative = 1e-9);
    }

    #[test]
    fn topk_floor_for_geometric_and_plateau_instances() {
        let r = BoundsReport::compute(&geometric(16, 0.8), 5, 1, 0.51, 0.1).unwrap();
        assert_relative_eq!(r.topk_lower, 8.8, max_relative = 1e-9);
        let r = BoundsReport::compute(&plateaus(), 6, 1, 0.51, 0.1).unwrap();
        assert_relative_eq!(r.topk_lower, 25.0 / 6.0, max_relative = 1e-9);
    }

    #[test]
    fn confidence_horizon_hand_value() {
        // alpha = 1: (2 n^2 / delta)^1 with n = 16, delta = 0.1.
        let r = BoundsReport::compute(&two_groups(), 5, 1, 1.0, 0.1).unwrap();
        assert_relative_eq!(r.confidence_horizon, 5120.0, max_relative = 1e-9);
        // Near the alpha floor the exponent 1/(2 alpha - 1) explodes: at
        // alpha = 0.51 the base is 2*0.51*256/(0.02*0.2) = 65280 and the
        // exponent is 50, about 5.5e240 -- astronomical but still finite.
        let r = BoundsReport::compute(&two_groups(), 5, 1, 0.51, 0.2).unwrap();
        assert!(r.confidence_horizon.is_finite());
        assert!(r.confidence_horizon > 1e240);
        // Slightly closer to 1/2 the f64 range runs out and the value
        // saturates at infinity: base 129280, exponent 100.
        let r = BoundsReport::compute(&two_groups(), 5, 1, 0.505, 0.2).unwrap();
        assert!(r.confidence_horizon.is_infinite());
    }

    #[test]
    fn pair_rounds_hand_values() {
        // Two groups at alpha = 1: every margin is 0.8/1.0 - 1/2 = 0.3, so
        // each duel needs 4/0.09 rounds and all 120 pairs together
        // 120 * 44.44...
        let r = BoundsReport::compute(&two_groups(), 5, 1, 1.0, 0.1).unwrap();
        for i in 1..16 {
            assert_relative_eq!(r.win_margin[i], 0.3, max_relative = 1e-12);
            assert_relative_eq!(r.pair_rounds[i], 4.0 / 0.09, max_relative = 1e-9);
        }
        assert_eq!(r.win_margin[0], 0.0);
        assert!(r.pair_rounds[0].is_infinite());
        assert_relative_eq!(r.pair_rounds_max, 4.0 / 0.09, max_relative = 1e-9);
        assert_relative_eq!(r.pair_rounds_total, 120.0 * 4.0 / 0.09, max_relative = 1e-9);
    }

    #[test]
    fn log_coefficient_scales_inversely_with_feedback_length() {
        // With every suboptimal duel equally hard, the per-item and max
        // round counts agree and the coefficient carries a pure 1/(m + 1).
        let r1 = BoundsReport::compute(&two_groups(), 6, 1, 0.51, 0.1).unwrap();
        let r5 = BoundsReport::compute(&two_groups(), 6, 5, 0.51, 0.1).unwrap();
        assert_relative_eq!(
            r1.winner_upper_log_coeff / r5.winner_upper_log_coeff,
            3.0,
            max_relative = 1e-9
        );
        assert!(r1.winner_upper_log_coeff > 0.0);
    }

    #[test]
    fn expected_bound_needs_alpha_above_one() {
        let r = BoundsReport::compute(&two_groups(), 5, 1, 0.51, 0.1).unwrap();
        assert!(r.winner_upper_constant_expected.is_infinite());
        let r = BoundsReport::compute(&two_groups(), 5, 1, 1.5, 0.1).unwrap();
        assert!(r.winner_upper_constant_expected.is_finite());
        assert!(r.winner_upper_constant_expected > 0.0);
    }

    #[test]
    fn ranking_rounds_for_a_single_position() {
        // theta = [1, 0.5], k = 1, alpha = 1: the only obstruction pair is
        // the suboptimal item against the best, margin 1/6.
        let inst = MnlInstance::new(vec![1.0, 0.5]).unwrap();
        let r = BoundsReport::compute(&inst, 1, 1, 1.0, 0.1).unwrap();
        assert_relative_eq!(r.ranking_rounds_total, 144.0, max_relative = 1e-9);
    }

    #[test]
    fn ranking_rounds_three_item_hand_value() {
        // theta = [1, 0.5, 0.25], k = 2, alpha = 1. Position 1 charges
        // 144 + 400/9; position 2 charges 144 (own top duel, counted from
        // both ends) twice, 225 for the best-vs-worst obstruction, and 144
        // for its duel with the worst item.
        let inst = MnlInstance::new(vec![1.0, 0.5, 0.25]).unwrap();
        let r = BoundsReport::compute(&inst, 2, 1, 1.0, 0.1).unwrap();
        assert_relative_eq!(r.ranking_rounds_total, 7609.0 / 9.0, max_relative = 1e-9);
    }

    #[test]
    fn single_position_ranking_matches_pair_rounds() {
        // k = 1 reduces the position-wise sum to the winner duels.
        let inst = MnlInstance::new((0..6).map(|i| 1.0 - 0.1 * i as f64).collect()).unwrap();
        let r = BoundsReport::compute(&inst, 1, 1, 0.51, 0.1).unwrap();
        let direct: f64 = (1..6).map(|i| r.pair_rounds[i]).sum();
        assert_relative_eq!(r.ranking_rounds_total, direct, max_relative = 1e-9);
    }

    #[test]
    fn challenger_margins_are_positive_under_distinct_weights() {
        let r = BoundsReport::compute(&geometric(16, 0.8), 5, 1, 0.51, 0.1).unwrap();
        assert_eq!(r.challenger_margin.len(), 11);
        for &(b, margin) in &r.challenger_margin {
            assert!(b >= 5, "challenger {b} should sit outside the top 5");
            assert!(margin > 0.0);
        }
        assert!(r.topk_upper_log_coeff > 0.0);
        assert!(r.topk_upper_log_coeff.is_finite());
    }

    #[test]
    fn degenerate_flags_fire_separately() {
        // Tied best: winner constants blow up.
        let tied_best = MnlInstance::new(vec![1.0, 1.0, 0.5]).unwrap();
        let r = BoundsReport::compute(&tied_best, 1, 1, 0.51, 0.1).unwrap();
        assert!(r.degenerate_winner);
        assert!(r.winner_lower.is_infinite());
        // Tie at the k-boundary: top-k floor blows up.
        let tied_boundary = MnlInstance::new(vec![1.0, 0.7, 0.7, 0.5]).unwrap();
        let r = BoundsReport::compute(&tied_boundary, 2, 1, 0.51, 0.1).unwrap();
        assert!(r.degenerate_topk);
        assert!(r.topk_lower.is_infinite());
        assert!(!r.degenerate_winner);
        // Tie inside the top k with a clean boundary: only the full-ranking
        // round count degenerates.
        let r = BoundsReport::compute(&tied_boundary, 3, 1, 0.51, 0.1).unwrap();
        assert!(!r.degenerate_topk);
        assert!(r.degenerate_ranking);
        assert!(r.ranking_rounds_total.is_infinite());
    }

    #[test]
    fn floors_scale_with_the_weights_and_margins_do_not() {
        let base = geometric(8, 0.8);
        let scaled = base.scaled(3.0).unwrap();
        let rb = BoundsReport::compute(&base, 3, 2, 0.51, 0.1).unwrap();
        let rs = BoundsReport::compute(&scaled, 3, 2, 0.51, 0.1).unwrap();
        assert_relative_eq!(rs.winner_lower, 3.0 * rb.winner_lower, max_relative = 1e-9);
        assert_relative_eq!(rs.topk_lower, 3.0 * rb.topk_lower, max_relative = 1e-9);
        for i in 0..8 {
            assert_relative_eq!(rs.win_margin[i], rb.win_margin[i], max_relative = 1e-12);
        }
        assert_relative_eq!(
            rs.pair_rounds_total,
            rb.pair_rounds_total,
            max_relative = 1e-9
        );
        assert_relative_eq!(
            rs.ranking_rounds_total,
            rb.ranking_rounds_total,
            max_relative = 1e-9
        );
    }

    #[test]
    fn parameter_validation() {
        let inst = two_groups();
        assert!(BoundsReport::compute(&inst, 0, 1, 0.51, 0.1).is_err());
        assert!(BoundsReport::compute(&inst, 16, 1, 0.51, 0.1).is_err());
        assert!(BoundsReport::compute(&inst, 5, 0, 0.51, 0.1).is_err());
        assert!(BoundsReport::compute(&inst, 5, 16, 0.51, 0.1).is_err());
        assert!(BoundsReport::compute(&inst, 5, 1, 0.5, 0.1).is_err());
        assert!(BoundsReport::compute(&inst, 5, 1, 0.51, 0.0).is_err());
        assert!(BoundsReport::compute(&inst, 5, 1, 0.51, 1.0).is_err());
    }

    #[test]
    fn render_is_keyed_and_one_based() {
        let r = BoundsReport::compute(&two_groups(), 5, 1, 0.51, 0.1).unwrap();
        let text = r.render();
        assert!(text.contains("winner_lower = 4"));
        assert!(text.contains("best_item = 1"));
        assert!(text.contains("item,weight_gap,win_margin,pair_rounds"));
        assert!(text.contains("challenger,margin"));
        // Per-item lines run from 1 to 16.
        assert!(text.contains("\n16,"));
        assert!(!text.contains("\n0,"));
    }
}
