//! Pairwise win counts and optimistic estimates built from them.
//!
//! `W[i][j]` counts how often `i` beat `j` across all recorded duels. The
//! derived quantities are `n_ij = W[i][j] + W[j][i]`, the empirical rate
//! `p_hat_ij = W[i][j] / n_ij`, and the upper confidence bound
//! `u_ij = p_hat_ij + sqrt(alpha * ln(t) / n_ij)`. An unobserved pair has an
//! infinite bound (maximal optimism) and reports `p_hat = 1/2`; the diagonal
//! is fixed at `u_ii = 1/2`.

use crate::error::{Error, Result};
use crate::feedback::PairwiseOutcome;

/// Smallest admissible exploration exponent; the confidence schedule only
/// concentrates for `alpha > 1/2`.
pub const MIN_ALPHA: f64 = 0.5;

/// Validates the exploration parameter shared by the UCB-based algorithms.
pub fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha.is_finite() && alpha > MIN_ALPHA) {
        return Err(Error::InvalidParameter(format!(
            "alpha must be finite and > {MIN_ALPHA}, got {alpha}"
        )));
    }
    Ok(())
}

/// Win-count matrix over `n` items plus the index of the most recently
/// recorded round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairwiseStats {
    n: usize,
    wins: Vec<u64>,
    round: u64,
}

impl PairwiseStats {
    /// Fresh all-zero counts for `n >= 2` items.
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "pairwise stats need at least 2 items, got {n}"
            )));
        }
        Ok(Self { n, wins: vec![0; n * n], round: 0 })
    }

    /// Number of items.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Index of the most recently recorded round (0 before any round).
    pub fn round(&self) -> u64 {
        self.round
    }

    /// Marks round `t` as recorded. Rounds whose feedback breaks into zero
    /// duels still advance this.
    pub fn set_round(&mut self, t: u64) {
        self.round = t;
    }

    /// Times `winner` beat `loser`.
    pub fn wins(&self, winner: usize, loser: usize) -> u64 {
        self.wins[winner * self.n + loser]
    }

    /// Times the pair `{i, j}` was decided in either direction.
    pub fn comparisons(&self, i: usize, j: usize) -> u64 {
        self.wins(i, j) + self.wins(j, i)
    }

    /// Total decided duels over all pairs.
    pub fn total_comparisons(&self) -> u64 {
        self.wins.iter().sum()
    }

    /// Records one duel.
    pub fn record(&mut self, outcome: PairwiseOutcome) -> Result<()> {
        let PairwiseOutcome { winner, loser } = outcome;
        if winner >= self.n {
            return Err(Error::IndexOutOfRange { index: winner, n: self.n });
        }
        if loser >= self.n {
            return Err(Error::IndexOutOfRange { index: loser, n: self.n });
        }
        if winner == loser {
            return Err(Error::SelfComparison(winner));
        }
        self.wins[winner * self.n + loser] += 1;
        Ok(())
    }

    /// Records a batch of duels (e.g. one round's rank-broken feedback).
    pub fn record_all(&mut self, outcomes: &[PairwiseOutcome]) -> Result<()> {
        for &o in outcomes {
            self.record(o)?;
        }
        Ok(())
    }

    /// Empirical win rate of `i` over `j`; `1/2` when the pair is unobserved
    /// and on the diagonal.
    pub fn p_hat(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return 0.5;
        }
        let n_ij = self.comparisons(i, j);
        if n_ij == 0 {
            0.5
        } else {
            self.wins(i, j) as f64 / n_ij as f64
        }
    }

    /// Upper confidence bound on the win rate of `i` over `j` at round `t`.
    ///
    /// The diagonal is `1/2` exactly; an unobserved pair returns `+inf`.
    /// Requires `alpha > 1/2` and `t >= 1`.
    pub fn ucb(&self, i: usize, j: usize, t: u64, alpha: f64) -> Result<f64> {
        check_alpha(alpha)?;
        if t == 0 {
            return Err(Error::InvalidParameter("round index t must be >= 1".to_string()));
        }
        if i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        if j >= self.n {
            return Err(Error::IndexOutOfRange { index: j, n: self.n });
        }
        Ok(self.ucb_matrix(t, alpha).get(i, j))
    }

    /// Precomputes the per-round pieces of the bound and returns a cheap
    /// accessor for the full matrix. Callers must have validated `alpha`.
    pub fn ucb_matrix(&self, t: u64, alpha: f64) -> UcbMatrix<'_> {
        debug_assert!(t >= 1);
        debug_assert!(alpha > MIN_ALPHA);
        UcbMatrix { stats: self, alpha_ln_t: alpha * (t as f64).ln() }
    }

    /// Rows of the dump: every ordered pair with 1-based indices and its win
    /// count, row-major, preceded by a `i,j,wins` header.
    pub fn dump_csv(&self) -> String {
        let mut out = String::from("i,j,wins\n");
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    out.push_str(&format!("{},{},{}\n", i + 1, j + 1, self.wins(i, j)));
                }
            }
        }
        out
    }
}

/// Upper-confidence-bound view of one round: `get(i, j)` is `u_ij` at the
/// round fixed when the view was created.
#[derive(Clone, Copy)]
pub struct UcbMatrix<'a> {
    stats: &'a PairwiseStats,
    alpha_ln_t: f64,
}

impl UcbMatrix<'_> {
    /// `u_ij`; `1/2` on the diagonal, `+inf` for unobserved pairs.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return 0.5;
        }
        let w_ij = self.stats.wins(i, j);
        let n_ij = w_ij + self.stats.wins(j, i);
        if n_ij == 0 {
            return f64::INFINITY;
        }
        let n = n_ij as f64;
        w_ij as f64 / n + (self.alpha_ln_t / n).sqrt()
    }

    /// Closure adapter for code that is generic over a bound source.
    pub fn accessor(&self) -> impl Fn(usize, usize) -> f64 + '_ {
        move |i, j| self.get(i, j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::feedback::{rank_break, RankingFeedback};
    use approx::assert_abs_diff_eq;

    #[test]
    fn record_accumulates_and_validates() {
        let mut stats = PairwiseStats::new(4).unwrap();
        assert_eq!(stats.total_comparisons(), 0);
        stats.record(PairwiseOutcome { winner: 1, loser: 0 }).unwrap();
        stats.record(PairwiseOutcome { winner: 1, loser: 0 }).unwrap();
        stats.record(PairwiseOutcome { winner: 0, loser: 1 }).unwrap();
        assert_eq!(stats.wins(1, 0), 2);
        assert_eq!(stats.wins(0, 1), 1);
        assert_eq!(stats.comparisons(0, 1), 3);
        assert_abs_diff_eq!(stats.p_hat(1, 0), 2.0 / 3.0, epsilon = 1e-15);
        assert!(matches!(
            stats.record(PairwiseOutcome { winner: 2, loser: 2 }),
            Err(Error::SelfComparison(2))
        ));
        assert!(stats.record(PairwiseOutcome { winner: 9, loser: 0 }).is_err());
        assert!(stats.record(PairwiseOutcome { winner: 0, loser: 9 }).is_err());
        assert!(PairwiseStats::new(1).is_err());
    }

    #[test]
    fn one_ranked_round_lands_in_the_matrix() {
        // Played {0,1,2,3}, full ranking 1 > 0 > 2 > 3: six duels.
        let mut stats = PairwiseStats::new(4).unwrap();
        let fb = RankingFeedback::new(vec![0, 1, 2, 3], vec![1, 0, 2, 3], 4).unwrap();
        stats.record_all(&rank_break(&fb)).unwrap();
        assert_eq!(stats.total_comparisons(), 6);
        for loser in [0, 2, 3] {
            assert_eq!(stats.wins(1, loser), 1);
        }
        assert_eq!(stats.wins(0, 2), 1);
        assert_eq!(stats.wins(0, 3), 1);
        assert_eq!(stats.wins(2, 3), 1);
        assert_eq!(stats.wins(3, 2), 0);
    }

    #[test]
    fn ucb_matches_hand_value() {
        // p_hat = 1/2 from 50/100 wins, alpha = 0.51, t = e^2 rounded: the
        // bonus is sqrt(0.51 * ln t / 100).
        let mut stats = PairwiseStats::new(2).unwrap();
        for _ in 0..50 {
            stats.record(PairwiseOutcome { winner: 0, loser: 1 }).unwrap();
            stats.record(PairwiseOutcome { winner: 1, loser: 0 }).unwrap();
        }
        let t = std::f64::consts::E.powi(2).round() as u64;
        let expected = 0.5 + (0.51 * (t as f64).ln() / 100.0).sqrt();
        assert_abs_diff_eq!(stats.ucb(0, 1, t, 0.51).unwrap(), expected, epsilon = 1e-12);
        // And with ln t = 2 exactly the bonus is sqrt(0.0102).
        assert_abs_diff_eq!(
            0.5 + (0.51_f64 * 2.0 / 100.0).sqrt(),
            0.6009950493836208,
            epsilon = 1e-12
        );
    }

    #[test]
    fn ucb_edge_cases() {
        let stats = PairwiseStats::new(3).unwrap();
        // Diagonal pinned to 1/2 even with no data.
        assert_eq!(stats.ucb(1, 1, 10, 0.51).unwrap(), 0.5);
        // Unobserved pair is maximally optimistic, but reports p_hat = 1/2.
        assert_eq!(stats.ucb(0, 1, 10, 0.51).unwrap(), f64::INFINITY);
        assert_eq!(stats.p_hat(0, 1), 0.5);
        // Parameter validation.
        assert!(stats.ucb(0, 1, 10, 0.5).is_err());
        assert!(stats.ucb(0, 1, 10, 0.0).is_err());
        assert!(stats.ucb(0, 1, 10, f64::NAN).is_err());
        assert!(stats.ucb(0, 1, 0, 0.51).is_err());
        assert!(stats.ucb(9, 1, 10, 0.51).is_err());
    }

    #[test]
    fn p_hat_directions_sum_to_one_once_observed() {
        let mut stats = PairwiseStats::new(3).unwrap();
        for _ in 0..7 {
            stats.record(PairwiseOutcome { winner: 2, loser: 1 }).unwrap();
        }
        for _ in 0..3 {
            stats.record(PairwiseOutcome { winner: 1, loser: 2 }).unwrap();
        }
        assert_abs_diff_eq!(stats.p_hat(1, 2) + stats.p_hat(2, 1), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn dump_lists_all_ordered_pairs_one_based() {
        let mut stats = PairwiseStats::new(3).unwrap();
        stats.record(PairwiseOutcome { winner: 0, loser: 2 }).unwrap();
        let dump = stats.dump_csv();
        let lines: Vec<&str> = dump.lines().collect();
        assert_eq!(lines[0], "i,j,wins");
        assert_eq!(lines.len(), 1 + 6);
        assert!(lines.contains(&"1,3,1"));
        assert!(lines.contains(&"3,1,0"));
    }
}
