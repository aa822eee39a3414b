use serde::{Deserialize, Serialize};

use crate::contingency::ContingencyTable;
use crate::error::{Error, Result};
use crate::scores::Metric;
use crate::synthetic::block_clustering;

/// Similarity between a reference block clustering and every block size.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub metric: Metric,
    pub n: usize,
    pub reference_s: usize,
    pub s_values: Vec<usize>,
    pub similarities: Vec<f64>,
}

impl ProfileReport {
    pub fn at(&self, s: usize) -> f64 {
        self.similarities[s - 1]
    }

    /// Block size with the largest similarity (first one on ties).
    pub fn argmax(&self) -> usize {
        let mut best = 0;
        for (idx, v) in self.similarities.iter().enumerate() {
            if *v > self.similarities[best] {
                best = idx;
            }
        }
        self.s_values[best]
    }

    /// `s,similarity` rows with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,similarity\n");
        for (s, v) in self.s_values.iter().zip(&self.similarities) {
            out.push_str(&format!("{s},{}\n", super::format_significant(*v)));
        }
        out
    }
}

/// `metric(A^(reference_s), A^(s))` for `s = 1..=n`, where `A^(s)` groups
/// consecutive samples into blocks of `s`.
pub fn similarity_profile(n: usize, reference_s: usize, metric: Metric) -> Result<ProfileReport> {
    if n < 2 {
        return Err(Error::InvalidConfig(format!(
            "profile needs n >= 2, got {n}"
        )));
    }
    let reference = block_clustering(n, reference_s)?;
    let s_values: Vec<usize> = (1..=n).collect();
    let similarities = s_values
        .iter()
        .map(|&s| {
            let other = block_clustering(n, s)?;
            Ok(metric.evaluate(&ContingencyTable::from_labelings(&reference, &other)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ProfileReport {
        metric,
        n,
        reference_s,
        s_values,
        similarities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_vanish() {
        for metric in [Metric::Ami, Metric::Pami] {
            let p = similarity_profile(30, 5, metric).unwrap();
            assert_eq!(p.similarities.len(), 30);
            assert!(p.at(1).abs() < 1e-12);
            assert!(p.at(30).abs() < 1e-12);
            assert_eq!(p.argmax(), 5);
        }
    }

    #[test]
    fn csv_has_one_row_per_block_size() {
        let p = similarity_profile(12, 3, Metric::Pami).unwrap();
        let csv = p.to_csv();
        assert_eq!(csv.lines().count(), 13);
        assert!(csv.starts_with("s,similarity\n1,"));
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(similarity_profile(1, 1, Metric::Ami).is_err());
        assert!(similarity_profile(10, 11, Metric::Ami).is_err());
    }
}
