//! Adjustment against pairwise permutations.
//!
//! The random permutation exchanges the labels of two samples drawn
//! uniformly and independently from `{1..n}` (so it is the identity with
//! probability `1/n`). Only the four cells touched by a swap change, which
//! gives closed forms in `O(kl)`, `O(nnz)` for sparse tables, and `O(k)` for
//! the self-similarity of one clustering.

use crate::contingency::{ContingencyTable, SparseContingencyTable};
use crate::labeling::Labeling;
use crate::sum::CompensatedSum;

use super::plogp;

const SPARSE_MIN_CELLS: usize = 1024;

/// Whether [`pami`] evaluates `t` through the sparse closed form: fewer than a
/// quarter of the cells are positive and the table has more than 1024 cells.
pub fn prefers_sparse(rows: usize, cols: usize, nnz: usize) -> bool {
    let cells = rows * cols;
    cells > SPARSE_MIN_CELLS && 4 * nnz < cells
}

/// Pairwise adjusted mutual information `I(X, Y) - E[I(X, Y_swap)]`.
///
/// Dispatches between [`pami_dense`] and the sparse form; both agree to
/// rounding error.
pub fn pami(t: &ContingencyTable) -> f64 {
    if prefers_sparse(t.rows(), t.cols(), t.nnz()) {
        sparse_form(t.nonzero(), t.row_sums(), t.col_sums(), t.total())
    } else {
        pami_dense(t)
    }
}

/// Closed form over every cell of the table, zero cells included.
pub fn pami_dense(t: &ContingencyTable) -> f64 {
    let n = t.total() as i64;
    let nf = n as f64;
    let (a, b) = (t.row_sums(), t.col_sums());
    let mut acc = CompensatedSum::new();
    for (i, j, c) in t.cells() {
        let (c, ai, bj) = (c as i64, a[i] as i64, b[j] as i64);
        let cf = c as f64;
        // pairs that move one sample out of this cell
        let outgoing = (c * (n - ai - bj + c)) as f64;
        if outgoing != 0.0 {
            acc += outgoing * (plogp(cf, nf) - plogp(cf - 1.0, nf));
        }
        // pairs that move one sample into this cell
        let incoming = ((ai - c) * (bj - c)) as f64;
        if incoming != 0.0 {
            acc += incoming * (plogp(cf, nf) - plogp(cf + 1.0, nf));
        }
    }
    2.0 * acc.value() / (nf * nf)
}

/// Closed form restricted to positive cells, plus a correction term that
/// accounts for every zero cell at once. Runs in `O(nnz + k + l)`.
pub fn pami_sparse(t: &SparseContingencyTable) -> f64 {
    sparse_form(
        t.entries().iter().copied(),
        t.row_sums(),
        t.col_sums(),
        t.total(),
    )
}

fn sparse_form(
    entries: impl Iterator<Item = (usize, usize, u64)>,
    a: &[u64],
    b: &[u64],
    total: u64,
) -> f64 {
    let n = total as i64;
    let nf = n as f64;
    let unit = plogp(1.0, nf);
    let mut acc = CompensatedSum::new();
    let mut sum_sq_cells: u128 = 0;
    for (i, j, c) in entries {
        let (c, ai, bj) = (c as i64, a[i] as i64, b[j] as i64);
        let cf = c as f64;
        sum_sq_cells += (c as u128) * (c as u128);
        let outgoing = (c * (n - ai - bj + c)) as f64;
        if outgoing != 0.0 {
            acc += outgoing * (plogp(cf, nf) - plogp(cf - 1.0, nf));
        }
        let incoming = ((ai - c) * (bj - c)) as f64;
        if incoming != 0.0 {
            acc += incoming * (plogp(cf, nf) - plogp(cf + 1.0, nf) + unit);
        }
    }
    // sum over all cells of (a_i - n_ij)(b_j - n_ij); the positive-cell share
    // was added back inside the loop, leaving exactly the zero cells
    let sq = |xs: &[u64]| xs.iter().map(|&x| (x as u128) * (x as u128)).sum::<u128>();
    let crossed = (total as u128) * (total as u128) + sum_sq_cells - sq(a) - sq(b);
    acc -= crossed as f64 * unit;
    2.0 * acc.value() / (nf * nf)
}

/// Pairwise adjusted entropy `q_p(A)` of a clustering, in `O(k)`.
pub fn pairwise_adjusted_entropy(a: &Labeling) -> f64 {
    pairwise_adjusted_entropy_from_sizes(&a.cluster_sizes())
}

/// [`pairwise_adjusted_entropy`] from positive cluster sizes.
pub fn pairwise_adjusted_entropy_from_sizes(sizes: &[u64]) -> f64 {
    let n: u64 = sizes.iter().sum();
    let nf = n as f64;
    let unit = plogp(1.0, nf);
    let mut acc = CompensatedSum::new();
    for &size in sizes {
        let moving = (size * (n - size)) as f64;
        if moving != 0.0 {
            let s = size as f64;
            acc += moving * (plogp(s, nf) - plogp(s - 1.0, nf) - unit);
        }
    }
    2.0 * acc.value() / (nf * nf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    fn table(rows: &[&[u64]]) -> ContingencyTable {
        let rows: Vec<Vec<u64>> = rows.iter().map(|r| r.to_vec()).collect();
        ContingencyTable::from_counts(&rows).unwrap()
    }

    #[test]
    fn constant_column_is_zero() {
        assert_eq!(pami(&table(&[&[3], &[1], &[2]])), 0.0);
        assert_eq!(pami(&table(&[&[5, 2, 1]])), 0.0);
    }

    #[test]
    fn crossed_design_is_negative() {
        let v = pami(&table(&[&[1, 1], &[1, 1]]));
        assert!((v + 0.25 * LN_2).abs() < 1e-15, "{v}");
    }

    #[test]
    fn sparse_form_matches_dense_on_small_tables() {
        for rows in [
            vec![vec![2, 0], vec![0, 2]],
            vec![vec![1, 1], vec![1, 1]],
            vec![vec![3, 0, 1], vec![0, 2, 0], vec![1, 0, 5]],
            vec![vec![1]],
        ] {
            let t = ContingencyTable::from_counts(&rows).unwrap();
            let d = pami_dense(&t);
            let s = pami_sparse(&t.to_sparse());
            assert!((d - s).abs() < 1e-15, "{rows:?}: {d} vs {s}");
        }
    }

    #[test]
    fn sparse_entries_example() {
        let s = SparseContingencyTable::from_entries(2, 2, vec![(0, 0, 2), (1, 1, 2)]).unwrap();
        assert!((pami_sparse(&s) - pami(&table(&[&[2, 0], &[0, 2]]))).abs() < 1e-15);
        let single = SparseContingencyTable::from_entries(1, 1, vec![(0, 0, 17)]).unwrap();
        assert_eq!(pami_sparse(&single), 0.0);
    }

    #[test]
    fn dispatch_threshold() {
        assert!(!prefers_sparse(32, 32, 100));
        assert!(prefers_sparse(33, 32, 100));
        assert!(!prefers_sparse(33, 32, 264));
        assert!(prefers_sparse(33, 32, 263));
    }

    #[test]
    fn pairwise_adjusted_entropy_examples() {
        assert_eq!(pairwise_adjusted_entropy_from_sizes(&[12]), 0.0);
        assert_eq!(pairwise_adjusted_entropy_from_sizes(&[1; 12]), 0.0);
        let v = pairwise_adjusted_entropy_from_sizes(&[2, 2]);
        assert!((v - 0.5 * LN_2).abs() < 1e-15);
        let a = Labeling::from_labels(&[0, 0, 1, 1]).unwrap();
        assert_eq!(pairwise_adjusted_entropy(&a), v);
    }

    #[test]
    fn pairwise_adjusted_entropy_equals_self_similarity() {
        let sizes = [5, 1, 3, 3, 8];
        let diag = ContingencyTable::diagonal(&sizes).unwrap();
        let q = pairwise_adjusted_entropy_from_sizes(&sizes);
        assert!((q - pami(&diag)).abs() < 1e-15);
        assert!(q > 0.0);
    }
}
