use std::hint::black_box;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::contingency::ContingencyTable;
use crate::error::{Error, Result};
use crate::scores::Metric;
use crate::synthetic::{equal_blocks, random_clustering_with, RngSeed};

use super::Summary;

/// Minimum wall time of one timed batch; cheaper calls are repeated inside
/// the batch and the per-call time is the batch time divided by its length.
const MIN_BATCH: Duration = Duration::from_millis(2);
const WARMUP: Duration = Duration::from_millis(5);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimingConfig {
    pub sizes: Vec<usize>,
    pub k: usize,
    pub repetitions: usize,
    pub metrics: Vec<Metric>,
    pub seed: RngSeed,
}

impl TimingConfig {
    pub fn new(sizes: Vec<usize>, k: usize, repetitions: usize, seed: RngSeed) -> Self {
        Self {
            sizes,
            k,
            repetitions,
            metrics: vec![Metric::Ami, Metric::Pami, Metric::PamiSparse],
            seed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TimingMode {
    /// The metric call alone, on a prebuilt contingency table.
    GivenTable,
    /// Table construction from the two labelings plus the metric call.
    EndToEnd,
}

impl TimingMode {
    pub fn name(self) -> &'static str {
        match self {
            TimingMode::GivenTable => "given-table",
            TimingMode::EndToEnd => "end-to-end",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TimingEntry {
    pub n: usize,
    pub metric: Metric,
    pub mode: TimingMode,
    pub mean_seconds: f64,
    pub std_seconds: f64,
    pub median_seconds: f64,
    pub repetitions: usize,
    pub calls_per_repetition: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TimingReport {
    pub per_size: Vec<TimingEntry>,
}

impl TimingReport {
    pub fn get(&self, n: usize, metric: Metric, mode: TimingMode) -> Option<&TimingEntry> {
        self.per_size
            .iter()
            .find(|e| e.n == n && e.metric == metric && e.mode == mode)
    }

    /// `n,metric,mode,mean_s,std_s,median_s,repetitions` rows with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,metric,mode,mean_s,std_s,median_s,repetitions\n");
        for e in &self.per_size {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                e.n,
                e.metric,
                e.mode.name(),
                super::format_significant(e.mean_seconds),
                super::format_significant(e.std_seconds),
                super::format_significant(e.median_seconds),
                e.repetitions
            ));
        }
        out
    }
}

/// Per-call wall time of `f` over `repetitions` timed batches, after warm-up.
pub(crate) fn measure<T>(repetitions: usize, mut f: impl FnMut() -> T) -> (Summary, usize) {
    let warm_start = Instant::now();
    let mut calls = 0usize;
    while calls < 1 || warm_start.elapsed() < WARMUP {
        black_box(f());
        calls += 1;
    }
    let mut batch = 1usize;
    loop {
        let start = Instant::now();
        for _ in 0..batch {
            black_box(f());
        }
        if start.elapsed() >= MIN_BATCH || batch >= 1 << 24 {
            break;
        }
        batch *= 2;
    }
    let samples: Vec<f64> = (0..repetitions)
        .map(|_| {
            let start = Instant::now();
            for _ in 0..batch {
                black_box(f());
            }
            start.elapsed().as_secs_f64() / batch as f64
        })
        .collect();
    (Summary::of(&samples), batch)
}

/// Times each metric for each `n`, comparing `k` equal blocks against a
/// random clustering with `k` categories. Runs on the calling thread.
pub fn timing_experiment(cfg: &TimingConfig) -> Result<TimingReport> {
    if cfg.sizes.is_empty() {
        return Err(Error::InvalidConfig("sizes must be nonempty".into()));
    }
    if cfg.repetitions < 3 {
        return Err(Error::InvalidConfig(
            "at least 3 repetitions are required".into(),
        ));
    }
    let mut per_size = Vec::new();
    for (idx, &n) in cfg.sizes.iter().enumerate() {
        let a = equal_blocks(n, cfg.k)?;
        let b = random_clustering_with(n, cfg.k, &mut cfg.seed.stream(idx as u64))?;
        let table = ContingencyTable::from_labelings(&a, &b)?;
        let sparse = table.to_sparse();
        for &metric in &cfg.metrics {
            let (given, calls) = match metric {
                Metric::PamiSparse => {
                    measure(cfg.repetitions, || crate::metrics::pami_sparse(&sparse))
                }
                _ => measure(cfg.repetitions, || metric.evaluate(&table)),
            };
            let (end_to_end, e2e_calls) = measure(cfg.repetitions, || {
                let t = ContingencyTable::from_labelings(&a, &b).expect("equal lengths");
                metric.evaluate(&t)
            });
            for (mode, summary, calls) in [
                (TimingMode::GivenTable, given, calls),
                (TimingMode::EndToEnd, end_to_end, e2e_calls),
            ] {
                per_size.push(TimingEntry {
                    n,
                    metric,
                    mode,
                    mean_seconds: summary.mean,
                    std_seconds: summary.std,
                    median_seconds: summary.median,
                    repetitions: cfg.repetitions,
                    calls_per_repetition: calls,
                });
            }
        }
    }
    Ok(TimingReport { per_size })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sizes_complete_quickly() {
        let cfg = TimingConfig::new(vec![100, 1000], 10, 3, RngSeed(5));
        let report = timing_experiment(&cfg).unwrap();
        assert_eq!(report.per_size.len(), 2 * 3 * 2);
        for e in &report.per_size {
            assert!(e.mean_seconds > 0.0 && e.mean_seconds < 1.0, "{e:?}");
            assert_eq!(e.repetitions, 3);
        }
        assert!(report.get(100, Metric::Ami, TimingMode::EndToEnd).is_some());
        assert_eq!(report.to_csv().lines().count(), 13);
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(timing_experiment(&TimingConfig::new(vec![], 10, 3, RngSeed(0))).is_err());
        assert!(timing_experiment(&TimingConfig::new(vec![100], 10, 2, RngSeed(0))).is_err());
        assert!(timing_experiment(&TimingConfig::new(vec![5], 10, 3, RngSeed(0))).is_err());
    }
}
