use serde::{Deserialize, Serialize};

/// JSON envelope shared by every experiment: the configuration echo, the
/// results, the seed and the producing tool version.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport<C, R> {
    pub config: C,
    pub results: R,
    pub seed: u64,
    pub tool_version: String,
}

impl<C, R> ExperimentReport<C, R> {
    pub fn new(config: C, results: R, seed: u64) -> Self {
        Self {
            config,
            results,
            seed,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

/// Mean, sample standard deviation and median of a non-empty sample.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub mean: f64,
    pub std: f64,
    pub median: f64,
}

impl Summary {
    pub fn of(values: &[f64]) -> Self {
        assert!(!values.is_empty(), "summary of an empty sample");
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let std = if values.len() > 1 {
            (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
        } else {
            0.0
        };
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let mid = sorted.len() / 2;
        let median = if sorted.len().is_multiple_of(2) {
            0.5 * (sorted[mid - 1] + sorted[mid])
        } else {
            sorted[mid]
        };
        Self { mean, std, median }
    }
}

/// Rounds to `digits` significant decimal digits.
pub fn round_significant(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .expect("scientific formatting parses back")
}

/// Shortest decimal rendering of `x` rounded to 12 significant digits.
pub fn format_significant(x: f64) -> String {
    let r = round_significant(x, 12);
    if r == 0.0 {
        // avoid "-0"
        "0".to_string()
    } else {
        r.to_string()
    }
}
