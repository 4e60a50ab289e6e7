use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use sw_harness::config::{ExperimentConfig, GridConfig};
use sw_harness::experiment::{run, sidecar_path, write_report, VerdictSummary};
use sw_harness::suites::{run_suite, Suite, SuiteParams};
use sw_harness::table::{render, run_table};
use sw_harness::{exit, exit_code};

#[derive(Parser)]
#[command(name = "sw-harness", version, about = "Checks RSK identities and Schur-Weyl expectation bounds")]
struct Cli {
    /// Overrides the seed of every suite, experiment and table.
    #[arg(long, global = true, env = "SEED")]
    seed: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a deterministic verification suite.
    Verify {
        /// One of: schensted, greene, lipschitz, lower-row-majorization,
        /// restriction-majorization, viennot, modmult-identity,
        /// excess-monotone, distance-inequalities, rearrangement.
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_d: usize,
        /// Instances for the random suites.
        #[arg(long, default_value_t = 100_000)]
        trials: usize,
    },
    /// Run an experiment config and write its CSV and JSON reports.
    Experiment { config: PathBuf },
    /// Print one claim over a grid config as a table.
    Table { claim: String, config: PathBuf },
}

enum Failure {
    Usage(anyhow::Error),
    Runtime(anyhow::Error),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::PASS };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("warning: could not size the thread pool: {e}");
        }
    }
    let code = match dispatch(cli) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            exit::USAGE
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            exit::FAIL
        }
    };
    ExitCode::from(code as u8)
}

fn dispatch(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Verify { suite, max_n, max_d, trials } => {
            let suite = Suite::from_id(&suite).map_err(Failure::Usage)?;
            let params = SuiteParams { max_n, max_d, trials, seed: cli.seed.unwrap_or(0) };
            eprintln!("running {suite} (max-n {max_n}, max-d {max_d})");
            let report = run_suite(suite, params).map_err(Failure::Usage)?;
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            emit(&format!("{json}\n"));
            if report.passed() {
                eprintln!("{suite}: pass, {} instances", report.checked);
                Ok(exit::PASS)
            } else {
                eprintln!("{suite}: FAIL, {} of {} instances", report.failures, report.checked);
                Ok(exit::FAIL)
            }
        }
        Command::Experiment { config } => {
            let mut cfg = ExperimentConfig::from_path(&config).map_err(Failure::Usage)?;
            if let Some(seed) = cli.seed {
                cfg.seed = seed;
            }
            eprintln!("experiment {}: {} over n = {:?}", cfg.id, cfg.check, cfg.n);
            let report = run(&cfg).map_err(Failure::Runtime)?;
            let out = resolve_output(&config, &cfg.output);
            write_report(&report, &out).map_err(Failure::Runtime)?;
            eprintln!(
                "wrote {} and {} ({} pass, {} fail, {} inconclusive)",
                out.display(),
                sidecar_path(&out).display(),
                report.summary.pass,
                report.summary.fail,
                report.summary.inconclusive
            );
            Ok(exit_code(report.summary.overall()))
        }
        Command::Table { claim, config } => {
            let mut grid = GridConfig::from_path(&config).map_err(Failure::Usage)?;
            if let Some(seed) = cli.seed {
                grid.seed = seed;
            }
            let rows = run_table(&claim, &grid).context("building table").map_err(Failure::Usage)?;
            emit(&render(&claim, &rows));
            Ok(exit_code(VerdictSummary::of(rows.iter().map(|r| &r.verdict)).overall()))
        }
    }
}

/// Writes data to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: writing to stdout: {e}");
        }
    }
}

/// Relative output paths are taken relative to the config file.
fn resolve_output(config: &std::path::Path, output: &str) -> PathBuf {
    let out = PathBuf::from(output);
    if out.is_absolute() {
        return out;
    }
    config.parent().map_or(out.clone(), |dir| dir.join(&out))
}
