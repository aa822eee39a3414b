//! Dense and sparse contingency tables of two labelings.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::labeling::Labeling;

/// Read access shared by the dense and sparse tables: the marginals and the
/// positive cells in row-major order.
pub trait Contingency {
    fn row_sums(&self) -> &[u64];
    fn col_sums(&self) -> &[u64];
    fn total(&self) -> u64;
    fn positive_cells(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_;
}

impl Contingency for ContingencyTable {
    fn row_sums(&self) -> &[u64] {
        &self.row_sums
    }

    fn col_sums(&self) -> &[u64] {
        &self.col_sums
    }

    fn total(&self) -> u64 {
        self.total
    }

    fn positive_cells(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.nonzero()
    }
}

impl Contingency for SparseContingencyTable {
    fn row_sums(&self) -> &[u64] {
        &self.row_sums
    }

    fn col_sums(&self) -> &[u64] {
        &self.col_sums
    }

    fn total(&self) -> u64 {
        self.total
    }

    fn positive_cells(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().copied()
    }
}

/// The `k x l` matrix `n_ij` counting samples in cluster `i` of the first
/// labeling and cluster `j` of the second, with its marginals.
///
/// Every row and column sum is at least one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContingencyTable {
    rows: usize,
    cols: usize,
    counts: Vec<u64>,
    row_sums: Vec<u64>,
    col_sums: Vec<u64>,
    total: u64,
    nnz: usize,
}

impl ContingencyTable {
    /// Counts co-occurrences of two labelings in `O(n + kl)`.
    pub fn from_labelings(a: &Labeling, b: &Labeling) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        let (rows, cols) = (a.num_clusters(), b.num_clusters());
        let mut counts = vec![0u64; rows * cols];
        for (&i, &j) in a.labels().iter().zip(b.labels()) {
            counts[i * cols + j] += 1;
        }
        Ok(Self::from_flat_unchecked(rows, cols, counts))
    }

    /// Builds a table from explicit row-major counts.
    pub fn from_counts(counts: &[Vec<u64>]) -> Result<Self> {
        let rows = counts.len();
        let cols = counts.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyInput);
        }
        if let Some(bad) = counts.iter().position(|row| row.len() != cols) {
            return Err(Error::InvalidTable(format!(
                "row {bad} has {} columns, expected {cols}",
                counts[bad].len()
            )));
        }
        let flat: Vec<u64> = counts.iter().flatten().copied().collect();
        let table = Self::from_flat_unchecked(rows, cols, flat);
        if let Some(i) = table.row_sums.iter().position(|&s| s == 0) {
            return Err(Error::InvalidTable(format!("row {i} is empty")));
        }
        if let Some(j) = table.col_sums.iter().position(|&s| s == 0) {
            return Err(Error::InvalidTable(format!("column {j} is empty")));
        }
        Ok(table)
    }

    fn from_flat_unchecked(rows: usize, cols: usize, counts: Vec<u64>) -> Self {
        let mut row_sums = vec![0u64; rows];
        let mut col_sums = vec![0u64; cols];
        let mut nnz = 0;
        for i in 0..rows {
            for j in 0..cols {
                let c = counts[i * cols + j];
                row_sums[i] += c;
                col_sums[j] += c;
                nnz += usize::from(c > 0);
            }
        }
        let total = row_sums.iter().sum();
        Self {
            rows,
            cols,
            counts,
            row_sums,
            col_sums,
            total,
            nnz,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.counts[i * self.cols + j]
    }

    pub fn row_sums(&self) -> &[u64] {
        &self.row_sums
    }

    pub fn col_sums(&self) -> &[u64] {
        &self.col_sums
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Number of strictly positive cells.
    pub fn nnz(&self) -> usize {
        self.nnz
    }

    /// Row-major iterator over every cell as `(i, j, n_ij)`.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .map(move |(idx, &c)| (idx / self.cols, idx % self.cols, c))
    }

    /// Row-major iterator over the positive cells.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.cells().filter(|&(_, _, c)| c > 0)
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        self.counts.chunks(self.cols).map(<[u64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut counts = vec![0u64; self.counts.len()];
        for (i, j, c) in self.cells() {
            counts[j * self.rows + i] = c;
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            counts,
            row_sums: self.col_sums.clone(),
            col_sums: self.row_sums.clone(),
            total: self.total,
            nnz: self.nnz,
        }
    }

    pub fn to_sparse(&self) -> SparseContingencyTable {
        SparseContingencyTable {
            rows: self.rows,
            cols: self.cols,
            entries: self.nonzero().collect(),
            row_sums: self.row_sums.clone(),
            col_sums: self.col_sums.clone(),
            total: self.total,
        }
    }

    /// Diagonal table of a labeling against itself.
    pub fn diagonal(sizes: &[u64]) -> Result<Self> {
        let k = sizes.len();
        let rows: Vec<Vec<u64>> = (0..k)
            .map(|i| {
                let mut row = vec![0; k];
                row[i] = sizes[i];
                row
            })
            .collect();
        Self::from_counts(&rows)
    }
}

/// Contingency table holding only its positive cells as `(i, j, n_ij)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseContingencyTable {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, u64)>,
    row_sums: Vec<u64>,
    col_sums: Vec<u64>,
    total: u64,
}

impl SparseContingencyTable {
    /// Counts co-occurrences in `O(n)` without materializing the `k x l` grid.
    pub fn from_labelings(a: &Labeling, b: &Labeling) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        let mut cells: HashMap<(usize, usize), u64> = HashMap::new();
        for (&i, &j) in a.labels().iter().zip(b.labels()) {
            *cells.entry((i, j)).or_insert(0) += 1;
        }
        let mut entries: Vec<_> = cells.into_iter().map(|((i, j), c)| (i, j, c)).collect();
        entries.sort_unstable();
        Ok(Self {
            rows: a.num_clusters(),
            cols: b.num_clusters(),
            entries,
            row_sums: a.cluster_sizes(),
            col_sums: b.cluster_sizes(),
            total: a.len() as u64,
        })
    }

    /// Validates triplets: positive counts, unique keys, no empty row or column.
    pub fn from_entries(
        rows: usize,
        cols: usize,
        mut entries: Vec<(usize, usize, u64)>,
    ) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyInput);
        }
        entries.sort_unstable();
        let mut row_sums = vec![0u64; rows];
        let mut col_sums = vec![0u64; cols];
        for (idx, &(i, j, c)) in entries.iter().enumerate() {
            if i >= rows || j >= cols {
                return Err(Error::InvalidTable(format!(
                    "entry ({i}, {j}) out of bounds"
                )));
            }
            if c == 0 {
                return Err(Error::InvalidTable(format!("entry ({i}, {j}) is zero")));
            }
            if idx > 0 && entries[idx - 1].0 == i && entries[idx - 1].1 == j {
                return Err(Error::InvalidTable(format!("duplicate entry ({i}, {j})")));
            }
            row_sums[i] += c;
            col_sums[j] += c;
        }
        if let Some(i) = row_sums.iter().position(|&s| s == 0) {
            return Err(Error::InvalidTable(format!("row {i} is empty")));
        }
        if let Some(j) = col_sums.iter().position(|&s| s == 0) {
            return Err(Error::InvalidTable(format!("column {j} is empty")));
        }
        let total = row_sums.iter().sum();
        Ok(Self {
            rows,
            cols,
            entries,
            row_sums,
            col_sums,
            total,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(usize, usize, u64)] {
        &self.entries
    }

    pub fn row_sums(&self) -> &[u64] {
        &self.row_sums
    }

    pub fn col_sums(&self) -> &[u64] {
        &self.col_sums
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn to_dense(&self) -> ContingencyTable {
        let mut counts = vec![0u64; self.rows * self.cols];
        for &(i, j, c) in &self.entries {
            counts[i * self.cols + j] = c;
        }
        ContingencyTable::from_flat_unchecked(self.rows, self.cols, counts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(a: &[usize], b: &[usize]) -> ContingencyTable {
        ContingencyTable::from_labelings(
            &Labeling::from_labels(a).unwrap(),
            &Labeling::from_labels(b).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn identical_labelings_give_diagonal_table() {
        let t = table(&[0, 0, 1, 1], &[0, 0, 1, 1]);
        assert_eq!(t.to_rows(), vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(t.row_sums(), &[2, 2]);
        assert_eq!(t.col_sums(), &[2, 2]);
        assert_eq!(t.total(), 4);
        assert_eq!(t.nnz(), 2);
    }

    #[test]
    fn crossed_design() {
        let t = table(&[0, 0, 1, 1], &[0, 1, 0, 1]);
        assert_eq!(t.to_rows(), vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(t.nnz(), 4);
    }

    #[test]
    fn constant_second_labeling() {
        let t = table(&[0, 1, 2], &[0, 0, 0]);
        assert_eq!(t.to_rows(), vec![vec![1], vec![1], vec![1]]);
        assert_eq!(t.col_sums(), &[3]);
    }

    #[test]
    fn length_mismatch_is_reported() {
        let a = Labeling::from_labels(&[0, 1]).unwrap();
        let b = Labeling::from_labels(&[0]).unwrap();
        assert_eq!(
            ContingencyTable::from_labelings(&a, &b),
            Err(Error::LengthMismatch { left: 2, right: 1 })
        );
        assert!(SparseContingencyTable::from_labelings(&a, &b).is_err());
    }

    #[test]
    fn empty_rows_and_columns_are_rejected() {
        assert!(ContingencyTable::from_counts(&[vec![1, 0], vec![1, 0]]).is_err());
        assert!(ContingencyTable::from_counts(&[vec![0, 0], vec![1, 1]]).is_err());
        assert!(ContingencyTable::from_counts(&[vec![1, 1], vec![1]]).is_err());
        assert!(ContingencyTable::from_counts(&[]).is_err());
    }

    #[test]
    fn sparse_entries_are_validated() {
        assert!(
            SparseContingencyTable::from_entries(2, 2, vec![(0, 0, 1), (0, 0, 2), (1, 1, 1)])
                .is_err()
        );
        assert!(SparseContingencyTable::from_entries(2, 2, vec![(0, 0, 1), (1, 1, 0)]).is_err());
        assert!(SparseContingencyTable::from_entries(2, 2, vec![(0, 0, 1)]).is_err());
        assert!(SparseContingencyTable::from_entries(1, 1, vec![(0, 3, 1)]).is_err());
        let s = SparseContingencyTable::from_entries(2, 2, vec![(1, 1, 2), (0, 0, 2)]).unwrap();
        assert_eq!(s.to_dense().to_rows(), vec![vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn sparse_and_dense_construction_agree() {
        let a = Labeling::from_labels(&[0, 0, 1, 2, 2, 2, 1]).unwrap();
        let b = Labeling::from_labels(&[1, 0, 0, 3, 3, 1, 1]).unwrap();
        let dense = ContingencyTable::from_labelings(&a, &b).unwrap();
        let sparse = SparseContingencyTable::from_labelings(&a, &b).unwrap();
        assert_eq!(sparse.to_dense(), dense);
        assert_eq!(dense.to_sparse(), sparse);
        assert_eq!(dense.transpose().transpose(), dense);
        assert_eq!(dense.transpose().get(2, 1), dense.get(1, 2));
    }
}
