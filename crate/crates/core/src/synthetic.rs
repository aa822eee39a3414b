//! Seeded generators for synthetic clusterings.
//!
//! All randomness comes from ChaCha8 seeded with a 64-bit [`RngSeed`].
//! Independent draws use distinct ChaCha stream numbers under the same key,
//! so the output of trial `t` does not depend on how many other trials run or
//! in which order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::labeling::Labeling;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RngSeed(pub u64);

impl RngSeed {
    /// Generator for stream `stream` under this seed.
    pub fn stream(self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.0);
        rng.set_stream(stream);
        rng
    }
}

impl From<u64> for RngSeed {
    fn from(seed: u64) -> Self {
        RngSeed(seed)
    }
}

/// Consecutive runs of `s` samples: sample `t` gets label `t / s`.
pub fn block_clustering(n: usize, s: usize) -> Result<Labeling> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if s == 0 || s > n {
        return Err(Error::InvalidSize { n, s });
    }
    Labeling::from_labels(&(0..n).map(|t| t / s).collect::<Vec<_>>())
}

/// `k` consecutive blocks whose sizes differ by at most one.
pub fn equal_blocks(n: usize, k: usize) -> Result<Labeling> {
    if k == 0 || k > n {
        return Err(Error::InvalidK { n, k });
    }
    Labeling::from_labels(&(0..n).map(|t| t * k / n).collect::<Vec<_>>())
}

/// Category probabilities proportional to `k` i.i.d. uniform draws.
pub fn draw_distribution<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Vec<f64> {
    loop {
        let weights: Vec<f64> = (0..k).map(|_| rng.random::<f64>()).collect();
        let total: f64 = weights.iter().sum();
        if total > 0.0 {
            return weights.into_iter().map(|w| w / total).collect();
        }
    }
}

/// Draws `n` independent categories from `probabilities`.
pub fn assign_samples<R: Rng + ?Sized>(n: usize, probabilities: &[f64], rng: &mut R) -> Vec<usize> {
    let mut cumulative = Vec::with_capacity(probabilities.len());
    let mut running = 0.0;
    for &p in probabilities {
        running += p;
        cumulative.push(running);
    }
    let last = probabilities.len() - 1;
    (0..n)
        .map(|_| {
            let u = rng.random::<f64>() * running;
            cumulative.partition_point(|&c| c <= u).min(last)
        })
        .collect()
}

/// Random clustering of `n` samples into at most `k` clusters; categories
/// that receive no sample disappear on canonicalization.
pub fn random_clustering_with<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    rng: &mut R,
) -> Result<Labeling> {
    if k == 0 || k > n {
        return Err(Error::InvalidK { n, k });
    }
    let p = draw_distribution(k, rng);
    Labeling::from_labels(&assign_samples(n, &p, rng))
}

/// [`random_clustering_with`] on stream 0 of `seed`.
pub fn random_clustering(n: usize, k: usize, seed: RngSeed) -> Result<Labeling> {
    random_clustering_with(n, k, &mut seed.stream(0))
}

/// Copy of `labels` where each sample, with probability `fraction`, is
/// reassigned to a uniform label in `0..k`.
pub fn perturbed<R: Rng + ?Sized>(
    labels: &Labeling,
    fraction: f64,
    k: usize,
    rng: &mut R,
) -> Labeling {
    let raw: Vec<usize> = labels
        .labels()
        .iter()
        .map(|&l| {
            if rng.random::<f64>() < fraction {
                rng.random_range(0..k.max(1))
            } else {
                l
            }
        })
        .collect();
    Labeling::from_labels(&raw).expect("perturbation preserves length")
}
