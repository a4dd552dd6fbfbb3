//! Brute-force references the fast paths are checked against.
//!
//! Everything here recomputes its answer from first principles: ranking
//! probabilities by exhaustive enumeration of the product formula, optimal
//! subsets by trying every candidate. Kept in the shipped library so the
//! CLI's self-check can run the same comparisons as the test suite.

use crate::error::{Error, Result};
use crate::mnl::{validate_subset, MnlInstance};
use crate::regret::Objective;
use rand::Rng;

/// Enumeration cap: |S|! grows too fast beyond this.
pub const MAX_ENUMERATION_SET: usize = 8;

/// Brute-force cap on the number of items.
pub const MAX_BRUTEFORCE_ITEMS: usize = 20;

/// Exact distribution over ordered m-prefixes of one subset.
#[derive(Debug, Clone)]
pub struct ExactDistribution {
    /// `(prefix, probability)` pairs in lexicographic prefix order.
    pub entries: Vec<(Vec<usize>, f64)>,
}

impl ExactDistribution {
    /// Sum of all probabilities.
    pub fn total(&self) -> f64 {
        self.entries.iter().map(|e| e.1).sum()
    }
}

/// Exact distribution of the length-m ranking prefix observed from `s`,
/// one entry per ordered arrangement, probabilities by direct expansion of
/// the successive-choice product.
pub fn enumerate_ranking_distribution(
    inst: &MnlInstance,
    s: &[usize],
    m: usize,
) -> Result<ExactDistribution> {
    validate_subset(s, inst.n())?;
    if s.len() > MAX_ENUMERATION_SET {
        return Err(Error::SupportTooLarge { size: s.len(), limit: MAX_ENUMERATION_SET });
    }
    if m == 0 || m > s.len() {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= m <= |S|, got m = {m}, |S| = {}",
            s.len()
        )));
    }
    let mut items = s.to_vec();
    items.sort_unstable();
    let total: f64 = items.iter().map(|&i| inst.weight(i)).sum();

    let mut entries = Vec::new();
    let mut prefix = Vec::with_capacity(m);
    enumerate_prefixes(inst, &mut items, total, m, 1.0, &mut prefix, &mut entries);
    Ok(ExactDistribution { entries })
}

/// Depth-first expansion over the remaining items; remove/reinsert keeps
/// `available` ascending so outcomes emit in lexicographic order.
fn enumerate_prefixes(
    inst: &MnlInstance,
    available: &mut Vec<usize>,
    total: f64,
    depth: usize,
    prob: f64,
    prefix: &mut Vec<usize>,
    entries: &mut Vec<(Vec<usize>, f64)>,
) {
    if depth == 0 {
        entries.push((prefix.clone(), prob));
        return;
    }
    for idx in 0..available.len() {
        let item = available[idx];
        let w = inst.weight(item);
        available.remove(idx);
        prefix.push(item);
        enumerate_prefixes(inst, available, total - w, depth - 1, prob * w / total, prefix, entries);
        prefix.pop();
        available.insert(idx, item);
    }
}

/// Draws `draws` ranking prefixes and returns relative frequencies aligned
/// to the exact enumeration's outcome order.
pub fn empirical_ranking_distribution(
    inst: &MnlInstance,
    s: &[usize],
    m: usize,
    draws: u64,
    rng: &mut impl Rng,
) -> Result<ExactDistribution> {
    let exact = enumerate_ranking_distribution(inst, s, m)?;
    if draws == 0 {
        return Err(Error::InvalidParameter("need at least one draw".to_string()));
    }
    let mut counts = vec![0u64; exact.entries.len()];
    for _ in 0..draws {
        let order = inst.sample_top_m(s, m, rng)?;
        let pos = exact
            .entries
            .binary_search_by(|e| e.0.as_slice().cmp(order.as_slice()))
            .expect("every sampled prefix is enumerated");
        counts[pos] += 1;
    }
    let entries = exact
        .entries
        .into_iter()
        .zip(counts)
        .map(|((o, _), c)| (o, c as f64 / draws as f64))
        .collect();
    Ok(ExactDistribution { entries })
}

/// Exhaustively searches for the regret-minimizing played set: the single
/// best item under the winner objective (checked against every subset of
/// size at most k by mean weight), the best size-k subset under top-k.
/// Ties resolve to the lexicographically smallest subset.
pub fn best_subset_bruteforce(
    inst: &MnlInstance,
    k: usize,
    objective: Objective,
) -> Result<Vec<usize>> {
    let n = inst.n();
    if n > MAX_BRUTEFORCE_ITEMS {
        return Err(Error::SupportTooLarge { size: n, limit: MAX_BRUTEFORCE_ITEMS });
    }
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    let mut best: Option<(f64, Vec<usize>)> = None;
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        let admissible = match objective {
            Objective::Winner => size <= k,
            Objective::TopK => size == k,
        };
        if !admissible {
            continue;
        }
        let items: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let mean = items.iter().map(|&i| inst.weight(i)).sum::<f64>() / size as f64;
        let better = match &best {
            None => true,
            Some((b, cur)) => mean > *b || (mean == *b && items < *cur),
        };
        if better {
            best = Some((mean, items));
        }
    }
    Ok(best.expect("n >= 1 guarantees at least one subset").1)
}

/// Total variation distance between two distributions over the same ordered
/// outcome list.
pub fn tv_distance(p: &ExactDistribution, q: &ExactDistribution) -> Result<f64> {
    if p.entries.len() != q.entries.len()
        || p.entries.iter().zip(&q.entries).any(|(a, b)| a.0 != b.0)
    {
        return Err(Error::MismatchedOutcomeSpace(
            "distributions enumerate different outcome lists".to_string(),
        ));
    }
    Ok(p.entries
        .iter()
        .zip(&q.entries)
        .map(|(a, b)| (a.1 - b.1).abs())
        .sum::<f64>()
        / 2.0)
}
