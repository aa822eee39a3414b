//! Label-level entry points: take raw label slices, canonicalize, pick the
//! table representation, and return scalar scores or serializable reports.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::contingency::{ContingencyTable, SparseContingencyTable};
use crate::error::{Error, Result};
use crate::labeling::Labeling;
use crate::metrics;

/// A metric comparing two clusterings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Metric {
    Mi,
    Vi,
    Emi,
    Ami,
    Pami,
    PamiSparse,
}

impl Metric {
    pub const ALL: [Metric; 6] = [
        Metric::Mi,
        Metric::Vi,
        Metric::Emi,
        Metric::Ami,
        Metric::Pami,
        Metric::PamiSparse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Mi => "mi",
            Metric::Vi => "vi",
            Metric::Emi => "emi",
            Metric::Ami => "ami",
            Metric::Pami => "pami",
            Metric::PamiSparse => "pami-sparse",
        }
    }

    /// Evaluates the metric on a dense table.
    pub fn evaluate(self, t: &ContingencyTable) -> f64 {
        match self {
            Metric::Mi => metrics::mutual_information(t),
            Metric::Vi => metrics::variation_of_information(t),
            Metric::Emi => metrics::expected_mi_full(t),
            Metric::Ami => metrics::ami(t),
            Metric::Pami => metrics::pami(t),
            Metric::PamiSparse => metrics::pami_sparse(&t.to_sparse()),
        }
    }

    fn evaluate_sparse(self, t: &SparseContingencyTable) -> f64 {
        match self {
            Metric::Mi => metrics::mutual_information(t),
            Metric::Vi => metrics::variation_of_information(t),
            Metric::Emi => metrics::expected_mi_full(t),
            Metric::Ami => metrics::ami(t),
            Metric::Pami => {
                if metrics::prefers_sparse(t.rows(), t.cols(), t.nnz()) {
                    metrics::pami_sparse(t)
                } else {
                    metrics::pami_dense(&t.to_dense())
                }
            }
            Metric::PamiSparse => metrics::pami_sparse(t),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Metric::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                let names: Vec<_> = Metric::ALL.iter().map(|m| m.name()).collect();
                format!("unknown metric '{s}', expected one of {}", names.join(", "))
            })
    }
}

/// Metric values (nats) for one pair of clusterings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricReport {
    pub n: usize,
    pub clusters_a: usize,
    pub clusters_b: usize,
    pub values: BTreeMap<Metric, f64>,
}

/// Information content of one clustering.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InfoReport {
    pub n: usize,
    pub clusters: usize,
    pub entropy: f64,
    pub adjusted_entropy: f64,
    pub pairwise_adjusted_entropy: f64,
}

/// Evaluates `metrics` on two labelings. The table is built sparsely, so
/// memory stays `O(n)` even when both labelings have many clusters.
pub fn compare(a: &Labeling, b: &Labeling, metrics: &[Metric]) -> Result<MetricReport> {
    let table = SparseContingencyTable::from_labelings(a, b)?;
    let values = metrics
        .iter()
        .map(|&m| (m, m.evaluate_sparse(&table)))
        .collect();
    Ok(MetricReport {
        n: a.len(),
        clusters_a: a.num_clusters(),
        clusters_b: b.num_clusters(),
        values,
    })
}

pub fn info(a: &Labeling) -> InfoReport {
    let sizes = a.cluster_sizes();
    InfoReport {
        n: a.len(),
        clusters: a.num_clusters(),
        entropy: metrics::entropy(&sizes).expect("cluster sizes are positive"),
        adjusted_entropy: metrics::adjusted_entropy(a),
        pairwise_adjusted_entropy: metrics::pairwise_adjusted_entropy_from_sizes(&sizes),
    }
}

fn score<T: Hash + Eq>(a: &[T], b: &[T], metric: Metric) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let (a, b) = (Labeling::canonicalize(a)?, Labeling::canonicalize(b)?);
    Ok(metric.evaluate_sparse(&SparseContingencyTable::from_labelings(&a, &b)?))
}

pub fn pami_score<T: Hash + Eq>(a: &[T], b: &[T]) -> Result<f64> {
    score(a, b, Metric::Pami)
}

pub fn ami_score<T: Hash + Eq>(a: &[T], b: &[T]) -> Result<f64> {
    score(a, b, Metric::Ami)
}

pub fn emi_score<T: Hash + Eq>(a: &[T], b: &[T]) -> Result<f64> {
    score(a, b, Metric::Emi)
}

pub fn mi_score<T: Hash + Eq>(a: &[T], b: &[T]) -> Result<f64> {
    score(a, b, Metric::Mi)
}

pub fn vi_score<T: Hash + Eq>(a: &[T], b: &[T]) -> Result<f64> {
    score(a, b, Metric::Vi)
}

pub fn pairwise_adjusted_entropy_score<T: Hash + Eq>(a: &[T]) -> Result<f64> {
    Ok(metrics::pairwise_adjusted_entropy(&Labeling::canonicalize(
        a,
    )?))
}
