use std::io::Write;
use std::path::Path;

use pami_core::experiments::format_significant;
use pami_core::scores::{InfoReport, MetricReport};
use serde::Serialize;
use tempfile::NamedTempFile;

use crate::error::CliError;

/// Writes `contents` to a temporary file next to `path` and renames it into
/// place, so a failed run leaves no partial output behind.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: path.display().to_string(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

pub fn is_csv(path: &Path) -> bool {
    path.extension()
        .is_some_and(|ext| ext.eq_ignore_ascii_case("csv"))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("reports serialize");
    out.push('\n');
    out
}

/// Copy of the report with every value rounded to 12 significant digits.
pub fn rounded_metrics(report: &MetricReport) -> MetricReport {
    let mut out = report.clone();
    for v in out.values.values_mut() {
        *v = format_significant(*v)
            .parse()
            .expect("formatted float parses");
    }
    out
}

pub fn rounded_info(report: &InfoReport) -> InfoReport {
    let round = |x: f64| {
        format_significant(x)
            .parse::<f64>()
            .expect("formatted float parses")
    };
    InfoReport {
        entropy: round(report.entropy),
        adjusted_entropy: round(report.adjusted_entropy),
        pairwise_adjusted_entropy: round(report.pairwise_adjusted_entropy),
        ..report.clone()
    }
}

fn aligned(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

pub fn metrics_text(report: &MetricReport) -> String {
    let mut rows = vec![
        ("n".to_string(), report.n.to_string()),
        ("clusters_a".to_string(), report.clusters_a.to_string()),
        ("clusters_b".to_string(), report.clusters_b.to_string()),
    ];
    rows.extend(
        report
            .values
            .iter()
            .map(|(m, v)| (m.to_string(), format_significant(*v))),
    );
    aligned(&rows)
}

pub fn info_text(report: &InfoReport) -> String {
    aligned(&[
        ("n".to_string(), report.n.to_string()),
        ("clusters".to_string(), report.clusters.to_string()),
        ("entropy".to_string(), format_significant(report.entropy)),
        (
            "adjusted_entropy".to_string(),
            format_significant(report.adjusted_entropy),
        ),
        (
            "pairwise_adjusted_entropy".to_string(),
            format_significant(report.pairwise_adjusted_entropy),
        ),
    ])
}

/// Parses `1e2..1e6` (every power of ten in the range) or a comma list such
/// as `100,1000,1e5`.
pub fn parse_sizes(raw: &str) -> Result<Vec<usize>, String> {
    let number = |s: &str| -> Result<usize, String> {
        let value: f64 = s
            .trim()
            .parse()
            .map_err(|_| format!("'{s}' is not a number"))?;
        if value < 1.0 || value.fract() != 0.0 || value > 1e12 {
            return Err(format!("'{s}' is not a positive integer size"));
        }
        Ok(value as usize)
    };
    if let Some((lo, hi)) = raw.split_once("..") {
        let (lo, hi) = (number(lo)?, number(hi)?);
        if lo > hi {
            return Err(format!("empty range '{raw}'"));
        }
        let mut sizes = Vec::new();
        let mut n = lo;
        while n <= hi {
            sizes.push(n);
            n = n.checked_mul(10).ok_or("size overflow")?;
        }
        return Ok(sizes);
    }
    raw.split(',').map(number).collect()
}
