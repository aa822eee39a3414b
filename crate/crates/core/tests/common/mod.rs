#![allow(dead_code)]

use pami_core::{ContingencyTable, Labeling};
use rand::Rng;

/// Labels drawn uniformly from `0..k`.
pub fn random_labeling<R: Rng>(rng: &mut R, n: usize, k: usize) -> Labeling {
    let raw: Vec<usize> = (0..n).map(|_| rng.random_range(0..k)).collect();
    Labeling::from_labels(&raw).unwrap()
}

/// A pair of labelings with `1 <= n <= max_n` and independently drawn
/// cluster counts, biased towards a few clusters but reaching singletons.
pub fn random_pair<R: Rng>(rng: &mut R, max_n: usize) -> (Labeling, Labeling) {
    let n = rng.random_range(1..=max_n);
    let mut k = || match rng.random_range(0..4) {
        0 => n,
        _ => rng.random_range(1..=n.min(8)),
    };
    let (ka, kb) = (k(), k());
    (random_labeling(rng, n, ka), random_labeling(rng, n, kb))
}

/// Table with each cell zero with probability `zero_density`, otherwise in
/// `1..=max_count`; empty rows and columns receive a single count.
pub fn random_table<R: Rng>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    zero_density: f64,
    max_count: u64,
) -> ContingencyTable {
    let mut counts: Vec<Vec<u64>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if rng.random::<f64>() < zero_density {
                        0
                    } else {
                        rng.random_range(1..=max_count)
                    }
                })
                .collect()
        })
        .collect();
    for row in counts.iter_mut() {
        if row.iter().all(|&c| c == 0) {
            row[rng.random_range(0..cols)] = 1;
        }
    }
    for j in 0..cols {
        if counts.iter().all(|row| row[j] == 0) {
            counts[rng.random_range(0..rows)][j] = 1;
        }
    }
    ContingencyTable::from_counts(&counts).unwrap()
}

/// Every set partition of `0..n` as a restricted growth string.
pub fn set_partitions(n: usize) -> Vec<Labeling> {
    fn extend(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Labeling>) {
        if prefix.len() == n {
            out.push(Labeling::from_labels(prefix).unwrap());
            return;
        }
        let next = prefix.iter().max().map_or(0, |m| m + 1);
        for label in 0..=next {
            prefix.push(label);
            extend(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), n, &mut out);
    out
}

pub fn table(a: &Labeling, b: &Labeling) -> ContingencyTable {
    ContingencyTable::from_labelings(a, b).unwrap()
}
