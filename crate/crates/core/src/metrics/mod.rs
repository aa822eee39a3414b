//! Information-theoretic clustering metrics, all in nats.
//!
//! Every function here is a pure function of its contingency table or
//! labeling. Values for trivial clusterings (one cluster, or `n` singletons)
//! are zero up to floating error for all adjusted metrics.

mod full;
mod info;
mod pairwise;

pub use full::{adjusted_entropy, ami, expected_mi_full};
pub use info::{entropy, joint_entropy, mutual_information, variation_of_information};
pub use pairwise::{
    pairwise_adjusted_entropy, pairwise_adjusted_entropy_from_sizes, pami, pami_dense, pami_sparse,
    prefers_sparse,
};

/// `(x/n) ln(x/n)`, taken as zero for `x <= 0`.
#[inline]
pub(crate) fn plogp(x: f64, n: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        let p = x / n;
        p * p.ln()
    }
}
