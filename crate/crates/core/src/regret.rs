//! Instantaneous regret and checkpoint schedules.

use crate::error::{Error, Result};
use crate::mnl::{validate_subset, MnlInstance};
use std::fmt;
use std::str::FromStr;

/// What a run is judged on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    /// Average per-round shortfall of the played set against the best item.
    Winner,
    /// Per-round weight shortfall of the played set against the best k items.
    TopK,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Objective::Winner => write!(f, "winner"),
            Objective::TopK => write!(f, "top-k"),
        }
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "winner" => Ok(Objective::Winner),
            "top-k" | "topk" => Ok(Objective::TopK),
            other => Err(Error::InvalidParameter(format!(
                "unknown objective '{other}' (valid: winner, top-k)"
            ))),
        }
    }
}

/// Winner-objective instantaneous regret of playing `s`: the average gap
/// between the best item's weight and each played item's weight.
pub fn instant_regret_winner(inst: &MnlInstance, s: &[usize]) -> Result<f64> {
    validate_subset(s, inst.n())?;
    let best = inst.weight(inst.best_item());
    let sum: f64 = s.iter().map(|&i| best - inst.weight(i)).sum();
    Ok(sum / s.len() as f64)
}

/// Top-k instantaneous regret of playing `s`: the gap between the total
/// weight of the k best items and of the played set, divided by k. Requires
/// `|s| = k`.
pub fn instant_regret_topk(inst: &MnlInstance, s: &[usize], k: usize) -> Result<f64> {
    validate_subset(s, inst.n())?;
    if s.len() != k {
        return Err(Error::InvalidSubset(format!(
            "top-k regret needs |S| = k, got |S| = {}, k = {k}",
            s.len()
        )));
    }
    let top: f64 = inst.top_k_set(k)?.iter().map(|&i| inst.weight(i)).sum();
    let got: f64 = s.iter().map(|&i| inst.weight(i)).sum();
    Ok((top - got) / k as f64)
}

/// Dispatch on the objective; `k` is ignored for the winner objective.
pub fn instant_regret(
    objective: Objective,
    inst: &MnlInstance,
    s: &[usize],
    k: usize,
) -> Result<f64> {
    match objective {
        Objective::Winner => instant_regret_winner(inst, s),
        Objective::TopK => instant_regret_topk(inst, s, k),
    }
}

/// Geometrically spaced round indices for recording cumulative regret:
/// `count` targets `horizon^(j/count)` rounded to the nearest round, plus the
/// horizon itself, deduplicated ascending. Short horizons therefore yield
/// fewer than `count` points.
pub fn geometric_checkpoints(horizon: u64, count: usize) -> Result<Vec<u64>> {
    if horizon == 0 {
        return Err(Error::InvalidParameter("horizon must be >= 1".to_string()));
    }
    if count == 0 {
        return Err(Error::InvalidParameter("checkpoint count must be >= 1".to_string()));
    }
    let mut points: Vec<u64> = (1..=count)
        .map(|j| {
            let x = (horizon as f64).powf(j as f64 / count as f64);
            (x.round() as u64).clamp(1, horizon)
        })
        .collect();
    points.push(horizon);
    points.sort_unstable();
    points.dedup();
    Ok(points)
}

/// Cumulative regret of one run sampled at fixed checkpoints.
#[derive(Debug, Clone)]
pub struct RegretTrajectory {
    checkpoints: Vec<u64>,
    cumulative: Vec<f64>,
}

impl RegretTrajectory {
    /// Starts an empty trajectory over an ascending checkpoint schedule.
    pub fn new(checkpoints: Vec<u64>) -> Result<Self> {
        if checkpoints.is_empty() {
            return Err(Error::InvalidParameter("no checkpoints given".to_string()));
        }
        if checkpoints[0] == 0 || checkpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(
                "checkpoints must be strictly increasing and >= 1".to_string(),
            ));
        }
        let len = checkpoints.len();
        Ok(Self { checkpoints, cumulative: Vec::with_capacity(len) })
    }

    /// Records round `t`'s running total if `t` is the next checkpoint.
    /// Rounds must be offered in order, every round exactly once.
    pub fn observe(&mut self, t: u64, cumulative_regret: f64) {
        if let Some(&next) = self.checkpoints.get(self.cumulative.len()) {
            if t == next {
                self.cumulative.push(cumulative_regret);
            }
        }
    }

    /// True once every checkpoint holds a value.
    pub fn complete(&self) -> bool {
        self.cumulative.len() == self.checkpoints.len()
    }

    pub fn checkpoints(&self) -> &[u64] {
        &self.checkpoints
    }

    pub fn cumulative(&self) -> &[f64] {
        &self.cumulative
    }

    /// Final recorded cumulative regret.
    pub fn last(&self) -> Option<f64> {
        self.cumulative.last().copied()
    }
}
