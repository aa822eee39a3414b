//! Exhaustive ground truth for the adjusted metrics at small `n`.
//!
//! Nothing here uses the closed forms from [`crate::metrics`]: every
//! expectation is an explicit average of mutual information over all `n!`
//! permutations or all `n^2` ordered swap pairs, and the mutual information
//! itself is recomputed from label counts for each relabeling.

use crate::error::{Error, Result};
use crate::labeling::Labeling;
use crate::sum::CompensatedSum;

/// Largest `n` accepted for full permutation enumeration (`8! = 40320`).
pub const FULL_ENUMERATION_BOUND: usize = 8;
/// Largest `n` accepted for ordered pair-swap enumeration.
pub const PAIR_ENUMERATION_BOUND: usize = 200;

/// Which labeling the random relabeling acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

/// Every permutation of `0..n` exactly once, in lexicographic order.
#[derive(Clone, Debug)]
pub struct PermutationEnumerator {
    current: Option<Vec<usize>>,
}

impl PermutationEnumerator {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_bound(n, FULL_ENUMERATION_BOUND)
    }

    pub fn with_bound(n: usize, bound: usize) -> Result<Self> {
        if n > bound {
            return Err(Error::TooLarge { n, bound });
        }
        Ok(Self {
            current: Some((0..n).collect()),
        })
    }
}

impl Iterator for PermutationEnumerator {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        // standard next-permutation step
        if let Some(pivot) = (1..next.len()).rev().find(|&i| next[i - 1] < next[i]) {
            let pivot = pivot - 1;
            let swap = (pivot + 1..next.len())
                .rev()
                .find(|&j| next[j] > next[pivot])
                .expect("a successor exists right of the pivot");
            next.swap(pivot, swap);
            next[pivot + 1..].reverse();
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Every ordered pair `(i, j)` in `0..n` x `0..n`, including `i == j`.
#[derive(Clone, Debug)]
pub struct PairSwapEnumerator {
    n: usize,
    index: usize,
}

impl PairSwapEnumerator {
    pub fn new(n: usize) -> Self {
        Self { n, index: 0 }
    }
}

impl Iterator for PairSwapEnumerator {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<(usize, usize)> {
        if self.index >= self.n * self.n {
            return None;
        }
        let pair = (self.index / self.n, self.index % self.n);
        self.index += 1;
        Some(pair)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.n * self.n - self.index;
        (left, Some(left))
    }
}

fn entropy_of_counts(counts: &[usize], n: f64) -> f64 {
    -counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / n;
            p * p.ln()
        })
        .sum::<f64>()
}

fn label_bound(labels: &[usize]) -> usize {
    labels.iter().max().map_or(0, |&m| m + 1)
}

/// Entropy of a label vector. Labels index a count vector, so they should
/// be small (canonical labels are).
pub fn entropy_of(labels: &[usize]) -> f64 {
    let mut counts = vec![0usize; label_bound(labels)];
    for &l in labels {
        counts[l] += 1;
    }
    entropy_of_counts(&counts, labels.len() as f64)
}

/// Joint entropy of two raw label vectors of equal length.
pub fn joint_entropy_of(a: &[usize], b: &[usize]) -> f64 {
    let width = label_bound(b);
    let mut counts = vec![0usize; label_bound(a) * width];
    for (&x, &y) in a.iter().zip(b) {
        counts[x * width + y] += 1;
    }
    entropy_of_counts(&counts, a.len() as f64)
}

/// `H(X) + H(Y) - H(X, Y)` from label counts.
pub fn mutual_information_of(a: &[usize], b: &[usize]) -> f64 {
    entropy_of(a) + entropy_of(b) - joint_entropy_of(a, b)
}

/// `(1/n!) sum_sigma f(sigma)`, summed in lexicographic order.
pub fn average_over_permutations(n: usize, mut f: impl FnMut(&[usize]) -> f64) -> Result<f64> {
    let mut acc = CompensatedSum::new();
    let mut count = 0usize;
    for perm in PermutationEnumerator::new(n)? {
        acc += f(&perm);
        count += 1;
    }
    Ok(acc.value() / count as f64)
}

/// `(1/n^2) sum_{i,j} f(i, j)` over ordered pairs in row-major order.
pub fn average_over_swaps(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> f64 {
    let acc: CompensatedSum = PairSwapEnumerator::new(n).map(|(i, j)| f(i, j)).sum();
    acc.value() / (n * n) as f64
}

/// `labels` composed with `perm`: sample `t` takes the label of `perm[t]`.
pub fn permuted(labels: &[usize], perm: &[usize]) -> Vec<usize> {
    perm.iter().map(|&p| labels[p]).collect()
}

fn check_lengths(a: &Labeling, b: &Labeling, bound: usize) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.len() > bound {
        return Err(Error::TooLarge { n: a.len(), bound });
    }
    Ok(a.len())
}

/// `I(a, b) - (1/n!) sum_sigma I(a, b o sigma)`. Requires `n <= 8`.
pub fn ami_bruteforce(a: &Labeling, b: &Labeling) -> Result<f64> {
    ami_bruteforce_on(a, b, Side::Second)
}

pub fn ami_bruteforce_on(a: &Labeling, b: &Labeling, side: Side) -> Result<f64> {
    let n = check_lengths(a, b, FULL_ENUMERATION_BOUND)?;
    let (x, y) = (a.labels(), b.labels());
    let expected = average_over_permutations(n, |perm| match side {
        Side::First => mutual_information_of(&permuted(x, perm), y),
        Side::Second => mutual_information_of(x, &permuted(y, perm)),
    })?;
    Ok(mutual_information_of(x, y) - expected)
}

/// `I(a, b) - (1/n^2) sum_{i,j} I(a, b with samples i and j exchanged)`,
/// counting the `n` identity swaps. Requires `n <= 200`.
pub fn pami_bruteforce(a: &Labeling, b: &Labeling) -> Result<f64> {
    pami_bruteforce_on(a, b, Side::Second)
}

pub fn pami_bruteforce_on(a: &Labeling, b: &Labeling, side: Side) -> Result<f64> {
    let n = check_lengths(a, b, PAIR_ENUMERATION_BOUND)?;
    let (x, y) = (a.labels(), b.labels());
    let mut scratch = match side {
        Side::First => x.to_vec(),
        Side::Second => y.to_vec(),
    };
    let expected = average_over_swaps(n, |i, j| {
        scratch.swap(i, j);
        let mi = match side {
            Side::First => mutual_information_of(&scratch, y),
            Side::Second => mutual_information_of(x, &scratch),
        };
        scratch.swap(i, j);
        mi
    });
    Ok(mutual_information_of(x, y) - expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;
    use std::f64::consts::LN_2;

    fn lab(raw: &[usize]) -> Labeling {
        Labeling::from_labels(raw).unwrap()
    }

    #[test]
    fn permutation_enumerator_is_exhaustive_and_distinct() {
        for n in 0..=6 {
            let perms: Vec<_> = PermutationEnumerator::new(n).unwrap().collect();
            let expected: usize = (1..=n).product();
            assert_eq!(perms.len(), expected);
            assert_eq!(perms.iter().collect::<HashSet<_>>().len(), expected);
        }
        assert_eq!(
            PermutationEnumerator::new(9).unwrap_err(),
            Error::TooLarge { n: 9, bound: 8 }
        );
    }

    #[test]
    fn pair_enumerator_counts_identity_swaps() {
        let pairs: Vec<_> = PairSwapEnumerator::new(3).collect();
        assert_eq!(pairs.len(), 9);
        assert_eq!(pairs.iter().filter(|(i, j)| i == j).count(), 3);
    }

    #[test]
    fn full_oracle_examples() {
        assert!(
            ami_bruteforce(&lab(&[0, 1, 2]), &lab(&[0, 1, 2]))
                .unwrap()
                .abs()
                < 1e-15
        );
        assert!(
            ami_bruteforce(&lab(&[0, 0, 1, 1]), &lab(&[0, 0, 0, 0]))
                .unwrap()
                .abs()
                < 1e-15
        );
        // a = b = [0,0,1,1]: of the 24 relabelings, 8 keep the pairs intact
        // (I = ln 2) and 16 cross them (I = 0).
        let v = ami_bruteforce(&lab(&[0, 0, 1, 1]), &lab(&[0, 0, 1, 1])).unwrap();
        assert!((v - (LN_2 - LN_2 / 3.0)).abs() < 1e-15);
    }

    #[test]
    fn pair_oracle_examples() {
        assert_eq!(
            pami_bruteforce(&lab(&[0, 1, 0, 2]), &lab(&[4; 4])).unwrap(),
            0.0
        );
        let crossed = pami_bruteforce(&lab(&[0, 0, 1, 1]), &lab(&[0, 1, 0, 1])).unwrap();
        assert!((crossed + 0.25 * LN_2).abs() < 1e-15);
        let same = pami_bruteforce(&lab(&[0, 0, 1, 1]), &lab(&[0, 0, 1, 1])).unwrap();
        assert!((same - 0.5 * LN_2).abs() < 1e-15);
    }

    #[test]
    fn oracle_rejects_oversized_or_mismatched_input() {
        let big = lab(&(0..9).collect::<Vec<_>>());
        assert!(matches!(
            ami_bruteforce(&big, &big),
            Err(Error::TooLarge { .. })
        ));
        let huge = lab(&vec![0; 201]);
        assert!(matches!(
            pami_bruteforce(&huge, &huge),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            pami_bruteforce(&lab(&[0, 1]), &lab(&[0])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn relabeling_either_side_gives_the_same_expectation() {
        let (a, b) = (lab(&[0, 0, 1, 2, 2, 1]), lab(&[0, 1, 1, 1, 2, 0]));
        let full = ami_bruteforce_on(&a, &b, Side::First).unwrap();
        assert!((full - ami_bruteforce_on(&a, &b, Side::Second).unwrap()).abs() < 1e-12);
        let pair = pami_bruteforce_on(&a, &b, Side::First).unwrap();
        assert!((pair - pami_bruteforce_on(&a, &b, Side::Second).unwrap()).abs() < 1e-12);
    }
}
