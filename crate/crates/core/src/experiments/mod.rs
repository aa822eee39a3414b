//! Synthetic studies comparing full and pairwise adjustment: similarity
//! profiles over block clusterings, ordering agreement on random triplets,
//! scaling of wall-clock time with `n`, and rank correlation of the two
//! metrics over candidate clusterings.

mod precision;
mod profile;
mod ranking;
mod report;
mod timing;

pub use precision::{precision_experiment, PrecisionConfig, PrecisionReport};
pub use profile::{similarity_profile, ProfileReport};
pub use ranking::{
    ordering_agreement, spearman, spearman_study, OrderingAgreement, SpearmanStudyConfig,
    SpearmanStudyReport,
};
pub use report::{format_significant, round_significant, ExperimentReport, Summary};
pub use timing::{timing_experiment, TimingConfig, TimingEntry, TimingMode, TimingReport};
