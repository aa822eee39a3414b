use std::collections::HashMap;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A clustering of `n` samples, stored as canonical labels `0..k` assigned in
/// order of first appearance.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Labeling {
    labels: Vec<usize>,
    num_clusters: usize,
}

impl Labeling {
    /// Remaps arbitrary labels to `0..k` by first appearance, preserving
    /// sample order.
    pub fn canonicalize<T: Hash + Eq>(raw: &[T]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut ids: HashMap<&T, usize> = HashMap::new();
        let labels = raw
            .iter()
            .map(|label| {
                let next = ids.len();
                *ids.entry(label).or_insert(next)
            })
            .collect();
        Ok(Self {
            labels,
            num_clusters: ids.len(),
        })
    }

    /// Builds a labeling from integer labels, canonicalizing them.
    pub fn from_labels(raw: &[usize]) -> Result<Self> {
        Self::canonicalize(raw)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn num_clusters(&self) -> usize {
        self.num_clusters
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Cluster sizes `a_i`, indexed by canonical label.
    pub fn cluster_sizes(&self) -> Vec<u64> {
        let mut sizes = vec![0u64; self.num_clusters];
        for &label in &self.labels {
            sizes[label] += 1;
        }
        sizes
    }

    /// True for a single cluster or for `n` singleton clusters.
    pub fn is_trivial(&self) -> bool {
        self.num_clusters == 1 || self.num_clusters == self.labels.len()
    }
}

/// Canonicalizes `raw` labels; see [`Labeling::canonicalize`].
pub fn canonicalize<T: Hash + Eq>(raw: &[T]) -> Result<Labeling> {
    Labeling::canonicalize(raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remaps_by_first_appearance() {
        assert_eq!(canonicalize(&["b", "b", "a"]).unwrap().labels(), &[0, 0, 1]);
        assert_eq!(canonicalize(&[5, 5, 5]).unwrap().labels(), &[0, 0, 0]);
        assert_eq!(canonicalize(&[3, 1, 3, 2]).unwrap().labels(), &[0, 1, 0, 2]);
    }

    #[test]
    fn rejects_empty_input() {
        assert_eq!(canonicalize::<i32>(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn negative_labels_are_accepted() {
        let l = canonicalize(&[-1i64, 7, -1]).unwrap();
        assert_eq!(l.labels(), &[0, 1, 0]);
        assert_eq!(l.num_clusters(), 2);
        assert_eq!(l.cluster_sizes(), vec![2, 1]);
    }

    #[test]
    fn trivial_detection() {
        assert!(canonicalize(&[1, 1, 1]).unwrap().is_trivial());
        assert!(canonicalize(&[1, 2, 3]).unwrap().is_trivial());
        assert!(canonicalize(&[4]).unwrap().is_trivial());
        assert!(!canonicalize(&[1, 1, 2]).unwrap().is_trivial());
    }
}
