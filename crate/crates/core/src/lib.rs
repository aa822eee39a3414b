//! Chance-adjusted mutual information for comparing clusterings.
//!
//! Two adjustments are provided. The classical one subtracts the expected
//! mutual information over all `n!` relabelings of the samples ([`ami`]),
//! which costs `O(max(k, l) n)`. The pairwise one subtracts the expectation
//! over random exchanges of two sample labels ([`pami`]), which has a closed
//! form costing `O(kl)` given the contingency table, or `O(nnz)` in sparse
//! form.
//!
//! ```
//! use pami_core::{ami, pami, ContingencyTable, Labeling};
//!
//! let truth = Labeling::canonicalize(&["x", "x", "y", "y", "z", "z"]).unwrap();
//! let guess = Labeling::canonicalize(&[1, 1, 2, 2, 2, 3]).unwrap();
//! let table = ContingencyTable::from_labelings(&truth, &guess).unwrap();
//! assert!(ami(&table) > 0.0);
//! assert!(pami(&table) > 0.0);
//! ```

pub mod contingency;
pub mod error;
pub mod experiments;
pub mod labeling;
pub mod metrics;
pub mod oracle;
pub mod scores;
pub mod sum;
pub mod synthetic;

pub use contingency::{Contingency, ContingencyTable, SparseContingencyTable};
pub use error::{Error, Result};
pub use labeling::{canonicalize, Labeling};
pub use metrics::{
    adjusted_entropy, ami, entropy, expected_mi_full, joint_entropy, mutual_information,
    pairwise_adjusted_entropy, pami, pami_dense, pami_sparse, variation_of_information,
};
pub use scores::{InfoReport, Metric, MetricReport};
pub use synthetic::RngSeed;
