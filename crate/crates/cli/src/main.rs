mod error;
mod labels;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pami_core::experiments::{
    format_significant, precision_experiment, similarity_profile, spearman_study,
    timing_experiment, ExperimentReport, PrecisionConfig, SpearmanStudyConfig, TimingConfig,
    TimingMode,
};
use pami_core::scores::{compare, info};
use pami_core::{Metric, RngSeed};
use serde::Serialize;

use error::CliError;
use labels::{read_labels, ColumnSelector, LabelFormat};

/// Pairwise and full-permutation adjusted mutual information for clusterings.
#[derive(Parser, Debug)]
#[command(name = "pami", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare two label files.
    Compare {
        file_a: PathBuf,
        file_b: PathBuf,
        /// Comma-separated metrics: mi, vi, emi, ami, pami, pami-sparse.
        #[arg(long, value_delimiter = ',', default_value = "mi,vi,ami,pami")]
        metrics: Vec<Metric>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Entropy, adjusted entropy and pairwise adjusted entropy of one label file.
    Info {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run a synthetic experiment and write its report.
    #[command(subcommand)]
    Experiment(Experiment),
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Column holding the labels, by 0-based index or header name.
    #[arg(long, default_value = "0")]
    column: String,
    /// Treat the first row as a header.
    #[arg(long)]
    header: bool,
}

impl InputArgs {
    fn format(&self) -> LabelFormat {
        LabelFormat {
            column: ColumnSelector::parse(&self.column),
            header: self.header,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Experiment {
    /// Similarity of a reference block clustering against every block size.
    Profile {
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long = "s-ref", default_value_t = 10)]
        s_ref: usize,
        #[arg(long, default_value = "pami")]
        metric: Metric,
        /// Output file; `.csv` writes CSV, anything else JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Agreement of the two adjustments on random clustering triplets.
    Precision {
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        k: usize,
        #[arg(long, default_value_t = 1000)]
        triplets: usize,
        #[arg(long, default_value_t = 100)]
        runs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Wall-clock time of each metric as the sample count grows.
    Timing {
        #[arg(long, default_value_t = 10)]
        k: usize,
        /// `1e2..1e6` for powers of ten, or a comma list.
        #[arg(long, default_value = "1e2..1e6")]
        sizes: String,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, value_delimiter = ',', default_value = "ami,pami,pami-sparse")]
        metrics: Vec<Metric>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rank correlation of the two adjustments over candidate clusterings.
    Spearman {
        #[arg(long, default_value_t = 500)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        candidates: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Compare {
            file_a,
            file_b,
            metrics,
            format,
            input,
        } => {
            let fmt = input.format();
            let a = read_labels(&file_a, &fmt)?;
            let b = read_labels(&file_b, &fmt)?;
            if a.len() != b.len() {
                return Err(CliError::LengthMismatch {
                    left: a.len(),
                    right: b.len(),
                });
            }
            let report = compare(&a, &b, &metrics)?;
            match format {
                Format::Text => print!("{}", output::metrics_text(&report)),
                Format::Json => print!("{}", output::to_json(&output::rounded_metrics(&report))),
            }
            Ok(())
        }
        Command::Info {
            file,
            format,
            input,
        } => {
            let report = info(&read_labels(&file, &input.format())?);
            match format {
                Format::Text => print!("{}", output::info_text(&report)),
                Format::Json => print!("{}", output::to_json(&output::rounded_info(&report))),
            }
            Ok(())
        }
        Command::Experiment(experiment) => run_experiment(experiment),
    }
}

/// Writes CSV or JSON to `out`, or JSON to stdout when no file is given;
/// the summary goes to stdout after a file write and to stderr otherwise.
fn emit<C: Serialize, R: Serialize>(
    out: Option<&Path>,
    report: &ExperimentReport<C, R>,
    csv: impl FnOnce() -> String,
    summary: &str,
) -> Result<(), CliError> {
    match out {
        Some(path) => {
            let body = if output::is_csv(path) {
                csv()
            } else {
                output::to_json(report)
            };
            output::write_atomic(path, &body)?;
            println!("{summary} -> {}", path.display());
        }
        None => {
            print!("{}", output::to_json(report));
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn run_experiment(experiment: Experiment) -> Result<(), CliError> {
    match experiment {
        Experiment::Profile {
            n,
            s_ref,
            metric,
            out,
        } => {
            let profile = similarity_profile(n, s_ref, metric)?;
            let summary = format!(
                "profile n={n} s_ref={s_ref} metric={metric}: argmax s={}, {} rows",
                profile.argmax(),
                profile.s_values.len()
            );
            let csv = profile.to_csv();
            let report = ExperimentReport::new(
                serde_json::json!({"n": n, "s_ref": s_ref, "metric": metric}),
                profile,
                0,
            );
            emit(out.as_deref(), &report, || csv, &summary)
        }
        Experiment::Precision {
            n,
            k,
            triplets,
            runs,
            seed,
            out,
        } => {
            let cfg = PrecisionConfig {
                n,
                k,
                triplets_per_run: triplets,
                runs,
                seed: RngSeed(seed),
            };
            let result = precision_experiment(&cfg)?;
            let summary = format!(
                "precision n={n} k={k}: mean {:.4} ± {:.4} over {runs} runs of {triplets} triplets",
                result.mean, result.std
            );
            let csv = std::iter::once("run,score\n".to_string())
                .chain(
                    result
                        .per_run_scores
                        .iter()
                        .enumerate()
                        .map(|(i, s)| format!("{i},{}\n", format_significant(*s))),
                )
                .collect::<String>();
            emit(
                out.as_deref(),
                &ExperimentReport::new(cfg, result, seed),
                || csv,
                &summary,
            )
        }
        Experiment::Timing {
            k,
            sizes,
            reps,
            metrics,
            seed,
            out,
        } => {
            let sizes = output::parse_sizes(&sizes).map_err(CliError::Usage)?;
            let cfg = TimingConfig {
                sizes,
                k,
                repetitions: reps,
                metrics,
                seed: RngSeed(seed),
            };
            let result = timing_experiment(&cfg)?;
            let mut parts = Vec::new();
            if cfg.metrics.contains(&Metric::Ami) && cfg.metrics.contains(&Metric::Pami) {
                for &n in &cfg.sizes {
                    let time = |m| {
                        result
                            .get(n, m, TimingMode::GivenTable)
                            .map(|e| e.median_seconds)
                    };
                    if let (Some(full), Some(pair)) = (time(Metric::Ami), time(Metric::Pami)) {
                        parts.push(format!("n={n}: ami/pami {:.1}x", full / pair));
                    }
                }
            }
            let summary = format!("timing k={k}: {}", parts.join(", "));
            let csv = result.to_csv();
            emit(
                out.as_deref(),
                &ExperimentReport::new(cfg, result, seed),
                || csv,
                &summary,
            )
        }
        Experiment::Spearman {
            n,
            k,
            candidates,
            trials,
            seed,
            out,
        } => {
            let cfg = SpearmanStudyConfig {
                n,
                k,
                candidates,
                trials,
                seed: RngSeed(seed),
            };
            let result = spearman_study(&cfg)?;
            let summary = format!(
                "spearman n={n} k={k}: median {:.4}, mean {:.4}, {} undefined of {trials}",
                result.median, result.mean, result.undefined_trials
            );
            let csv = std::iter::once("trial,spearman\n".to_string())
                .chain(result.per_trial.iter().enumerate().map(|(i, s)| match s {
                    Some(v) => format!("{i},{}\n", format_significant(*v)),
                    None => format!("{i},\n"),
                }))
                .collect::<String>();
            emit(
                out.as_deref(),
                &ExperimentReport::new(cfg, result, seed),
                || csv,
                &summary,
            )
        }
    }
}
