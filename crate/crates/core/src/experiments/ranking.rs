use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::contingency::ContingencyTable;
use crate::error::{Error, Result};
use crate::labeling::Labeling;
use crate::metrics::{ami, pami};
use crate::synthetic::{block_clustering, perturbed, random_clustering_with, RngSeed};

use super::Summary;

/// 1-based ranks, tied values sharing the average of their positions.
fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        let rank = (start + end + 1) as f64 / 2.0;
        for &idx in &order[start..end] {
            ranks[idx] = rank;
        }
        start = end;
    }
    ranks
}

/// Spearman rank correlation with average ranks for ties.
///
/// Fails with [`Error::DegenerateInput`] when either sequence is constant.
pub fn spearman(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch {
            left: xs.len(),
            right: ys.len(),
        });
    }
    if xs.len() < 2 {
        return Err(Error::InvalidConfig(
            "spearman needs at least two values".into(),
        ));
    }
    let (rx, ry) = (average_ranks(xs), average_ranks(ys));
    let mean = (xs.len() + 1) as f64 / 2.0;
    let (mut cov, mut vx, mut vy) = (0.0, 0.0, 0.0);
    for (x, y) in rx.iter().zip(&ry) {
        cov += (x - mean) * (y - mean);
        vx += (x - mean) * (x - mean);
        vy += (y - mean) * (y - mean);
    }
    if vx == 0.0 || vy == 0.0 {
        return Err(Error::DegenerateInput);
    }
    Ok((cov / (vx * vy).sqrt()).clamp(-1.0, 1.0))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrderingAgreement {
    pub ami: Vec<f64>,
    pub pami: Vec<f64>,
    /// `None` when either score vector is constant.
    pub spearman: Option<f64>,
}

/// Scores every candidate against the ground truth with both adjustments and
/// correlates the two orderings.
pub fn ordering_agreement(
    ground_truth: &Labeling,
    candidates: &[Labeling],
) -> Result<OrderingAgreement> {
    if candidates.len() < 2 {
        return Err(Error::InvalidConfig(
            "at least two candidates are required".into(),
        ));
    }
    let mut full = Vec::with_capacity(candidates.len());
    let mut pairwise = Vec::with_capacity(candidates.len());
    for candidate in candidates {
        let t = ContingencyTable::from_labelings(ground_truth, candidate)?;
        full.push(ami(&t));
        pairwise.push(pami(&t));
    }
    let spearman = match spearman(&full, &pairwise) {
        Ok(rho) => Some(rho),
        Err(Error::DegenerateInput) => None,
        Err(e) => return Err(e),
    };
    Ok(OrderingAgreement {
        ami: full,
        pami: pairwise,
        spearman,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpearmanStudyConfig {
    pub n: usize,
    pub k: usize,
    pub candidates: usize,
    pub trials: usize,
    pub seed: RngSeed,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpearmanStudyReport {
    /// Per-trial correlation; `None` where it was undefined.
    pub per_trial: Vec<Option<f64>>,
    pub median: f64,
    pub mean: f64,
    pub undefined_trials: usize,
}

/// Candidate pool for one trial: mostly noisy copies of the ground truth at
/// random noise levels, plus block and random clusterings unrelated to it.
fn candidate_pool<R: Rng>(
    truth: &Labeling,
    cfg: &SpearmanStudyConfig,
    rng: &mut R,
) -> Result<Vec<Labeling>> {
    let n = cfg.n;
    (0..cfg.candidates)
        .map(|idx| match idx % 10 {
            5 | 6 => block_clustering(n, rng.random_range(2..=n / 2)),
            7 | 8 => random_clustering_with(n, rng.random_range(2..=(2 * cfg.k).min(n)), rng),
            9 => {
                let k = (2 * cfg.k).min(n);
                Ok(perturbed(truth, rng.random::<f64>(), k, rng))
            }
            _ => Ok(perturbed(truth, rng.random::<f64>(), cfg.k, rng)),
        })
        .collect()
}

/// Median Spearman correlation between the two metric orderings over many
/// synthetic ground-truth / candidate sets. Trial `t` uses stream `t`.
pub fn spearman_study(cfg: &SpearmanStudyConfig) -> Result<SpearmanStudyReport> {
    if cfg.trials == 0 || cfg.candidates < 2 || cfg.n < 4 {
        return Err(Error::InvalidConfig(
            "need trials >= 1, candidates >= 2 and n >= 4".into(),
        ));
    }
    let mut per_trial = Vec::with_capacity(cfg.trials);
    for trial in 0..cfg.trials {
        let mut rng = cfg.seed.stream(trial as u64);
        let truth = random_clustering_with(cfg.n, cfg.k, &mut rng)?;
        let candidates = candidate_pool(&truth, cfg, &mut rng)?;
        per_trial.push(ordering_agreement(&truth, &candidates)?.spearman);
    }
    let defined: Vec<f64> = per_trial.iter().flatten().copied().collect();
    if defined.is_empty() {
        return Err(Error::DegenerateInput);
    }
    let summary = Summary::of(&defined);
    Ok(SpearmanStudyReport {
        undefined_trials: per_trial.len() - defined.len(),
        per_trial,
        median: summary.median,
        mean: summary.mean,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spearman_examples() {
        assert!((spearman(&[1.0, 2.0, 3.0], &[10.0, 20.0, 30.0]).unwrap() - 1.0).abs() < 1e-15);
        assert!((spearman(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]).unwrap() + 1.0).abs() < 1e-15);
        // d = (0, 1, 1, 0): 1 - 6 * 2 / (4 * 15)
        assert!(
            (spearman(&[1.0, 2.0, 3.0, 4.0], &[1.0, 3.0, 2.0, 4.0]).unwrap() - 0.8).abs() < 1e-15
        );
    }

    #[test]
    fn spearman_errors() {
        assert!(matches!(
            spearman(&[1.0, 2.0], &[1.0]),
            Err(Error::LengthMismatch { .. })
        ));
        assert_eq!(
            spearman(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]),
            Err(Error::DegenerateInput)
        );
        assert!(spearman(&[1.0], &[1.0]).is_err());
    }

    #[test]
    fn ties_get_average_ranks() {
        assert_eq!(
            average_ranks(&[5.0, 1.0, 5.0, 3.0]),
            vec![3.5, 1.0, 3.5, 2.0]
        );
    }

    #[test]
    fn exact_match_beats_trivial_clustering() {
        let truth = block_clustering(40, 8).unwrap();
        let constant = Labeling::from_labels(&[0; 40]).unwrap();
        let r = ordering_agreement(&truth, &[truth.clone(), constant]).unwrap();
        assert!(r.ami[0] > 0.0 && r.pami[0] > 0.0);
        assert!(r.ami[1].abs() < 1e-12 && r.pami[1].abs() < 1e-12);
        assert_eq!(r.spearman, Some(1.0));
    }

    #[test]
    fn identical_candidates_are_undefined() {
        let truth = block_clustering(40, 8).unwrap();
        let c = block_clustering(40, 5).unwrap();
        let r = ordering_agreement(&truth, &[c.clone(), c]).unwrap();
        assert_eq!(r.spearman, None);
        assert!(ordering_agreement(&truth, std::slice::from_ref(&truth)).is_err());
    }

    #[test]
    fn study_is_deterministic() {
        let cfg = SpearmanStudyConfig {
            n: 120,
            k: 4,
            candidates: 10,
            trials: 5,
            seed: RngSeed(3),
        };
        let a = spearman_study(&cfg).unwrap();
        assert_eq!(a, spearman_study(&cfg).unwrap());
        assert_eq!(a.per_trial.len(), 5);
    }
}
