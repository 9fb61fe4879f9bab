//! `nlubench` — run benchmarks, aggregate scores, and emit leaderboards.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use nlubench_core::corpus::Language;
use nlubench_core::harness::{
    aggregate_command, analyze_command, export_matrix_command, import_scores_command,
    leaderboard_command, render_leaderboard, run_benchmark_command, RunConfig, DEFAULT_ALPHA,
};

#[derive(Parser)]
#[command(name = "nlubench", version, about = "Few-shot NLU benchmark harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every configured (model, dataset) pair and persist the results.
    Benchmark {
        /// Run configuration (JSON).
        #[arg(long)]
        config: PathBuf,
    },
    /// Build the rank-score matrix and per-dataset traces from results.
    Aggregate {
        #[arg(long)]
        results: PathBuf,
        /// Significance level for the rank walk.
        #[arg(long, default_value_t = DEFAULT_ALPHA)]
        alpha: f64,
    },
    /// Emit per-language leaderboards (JSON and text).
    Leaderboard {
        #[arg(long)]
        results: PathBuf,
        /// Language code (da, sv, no, is, fo, de, nl, en); all when omitted.
        #[arg(long)]
        language: Option<String>,
        #[arg(long, default_value_t = DEFAULT_ALPHA)]
        alpha: f64,
    },
    /// Correlate the generative flag with per-task performance.
    Analyze {
        #[arg(long)]
        results: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ALPHA)]
        alpha: f64,
    },
    /// Merge externally produced score rows into the results directory.
    ImportScores {
        #[arg(long)]
        results: PathBuf,
        /// Line-delimited JSON rows {model, dataset, scores, generative}.
        #[arg(long)]
        file: PathBuf,
    },
    /// Write the model × dataset mean-score matrix as CSV.
    ExportMatrix {
        #[arg(long)]
        results: PathBuf,
        /// Target file; defaults to <results>/matrix.csv.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    env_logger::init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn parse_language(code: &str) -> anyhow::Result<Language> {
    Language::from_code(code)
        .ok_or_else(|| anyhow!("unknown language code {code:?} (expected da, sv, no, is, fo, de, nl, or en)"))
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Benchmark { config } => {
            let config = RunConfig::load(&config).context("loading config")?;
            let cells = run_benchmark_command(&config)?;
            for cell in &cells {
                match &cell.aborted {
                    None => println!(
                        "{} × {}: {} iteration(s)",
                        cell.model, cell.dataset, cell.iterations
                    ),
                    Some(reason) => println!(
                        "{} × {}: {} iteration(s), INCOMPLETE ({reason})",
                        cell.model, cell.dataset, cell.iterations
                    ),
                }
            }
            println!("results written to {}", config.results_dir.display());
        }
        Command::Aggregate { results, alpha } => {
            let report = aggregate_command(&results, alpha)?;
            for warning in &report.warnings {
                eprintln!("warning: {warning}");
            }
            println!(
                "ranked {} model(s) over {} dataset(s); wrote rankscores.json and {} trace file(s)",
                report.matrix.model_ids.len(),
                report.matrix.dataset_ids.len(),
                report.trace.datasets.len()
            );
        }
        Command::Leaderboard { results, language, alpha } => {
            let language = language.as_deref().map(parse_language).transpose()?;
            let boards = leaderboard_command(&results, alpha, language)?;
            for board in &boards {
                println!("[{}]", board.language);
                print!("{}", render_leaderboard(board));
                println!();
            }
        }
        Command::Analyze { results, alpha } => {
            let report = analyze_command(&results, alpha)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Command::ImportScores { results, file } => {
            let count = import_scores_command(&results, &file)?;
            println!("imported {count} row(s) into {}", results.join("imported.jsonl").display());
        }
        Command::ExportMatrix { results, out } => {
            let path = export_matrix_command(&results, out.as_deref())?;
            println!("wrote {}", path.display());
        }
    }
    Ok(())
}
