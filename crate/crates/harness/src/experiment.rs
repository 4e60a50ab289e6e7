//! Runs an [`ExperimentConfig`] and writes its CSV report and JSON sidecar.

use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use rayon::prelude::*;
use serde::Serialize;

use schur_weyl::bounds::{coupling_check_with, BoundCheck, Evidence, Mode, Source, Verdict};

use crate::config::{CheckKind, ExperimentConfig};

/// CSV column order.
pub const CSV_HEADER: [&str; 9] = ["n", "k", "estimate", "ci", "bound", "mode", "samples", "seed", "verdict"];

/// One `(n, k)` point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub n: usize,
    /// `None` when the check does not depend on a row index.
    pub k: Option<usize>,
    pub estimate: f64,
    pub ci: f64,
    pub bound: f64,
    pub mode: Mode,
    pub samples: u64,
    pub seed: u64,
    pub verdict: Verdict,
    /// Time spent on the whole `n` point, shared by its `k` rows.
    #[serde(skip)]
    pub wall_ms: f64,
}

impl ReportRow {
    fn from_check(n: usize, k: Option<usize>, seed: u64, check: BoundCheck, wall_ms: f64) -> Self {
        Self {
            n,
            k,
            estimate: check.estimate,
            ci: check.radius,
            bound: check.bound,
            mode: check.mode,
            samples: check.samples,
            seed,
            verdict: check.verdict,
            wall_ms,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct VerdictSummary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

impl VerdictSummary {
    pub fn of<'a>(verdicts: impl IntoIterator<Item = &'a Verdict>) -> Self {
        let mut s = Self::default();
        for v in verdicts {
            match v {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Inconclusive => s.inconclusive += 1,
            }
        }
        s
    }

    /// Fail beats inconclusive beats pass.
    pub fn overall(&self) -> Verdict {
        if self.fail > 0 {
            Verdict::Fail
        } else if self.inconclusive > 0 {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub rows: Vec<ReportRow>,
    pub summary: VerdictSummary,
    pub wall_ms: f64,
}

#[derive(Serialize)]
struct SidecarRow<'a> {
    #[serde(flatten)]
    row: &'a ReportRow,
    wall_ms: f64,
}

#[derive(Serialize)]
struct Sidecar<'a> {
    config: &'a ExperimentConfig,
    columns: [&'static str; 9],
    rows: Vec<SidecarRow<'a>>,
    summary: VerdictSummary,
    verdict: Verdict,
    wall_ms: f64,
}

/// Evaluates every point of the sweep. Points run in parallel; each draws
/// from its own RNG stream (its index in the sweep), and rows come back in
/// sweep order.
pub fn run(config: &ExperimentConfig) -> Result<ExperimentReport> {
    config.validate()?;
    let started = Instant::now();
    let kind = config.kind();
    let alpha = config.alpha.as_ref().map(|a| a.resolve()).transpose()?;
    let beta = config.beta.as_ref().map(|b| b.resolve()).transpose()?;
    let base = config.settings();
    let ks: Vec<Option<usize>> = match (config.k, kind.uses_k(), &alpha) {
        (Some(k), true, _) => vec![Some(k)],
        (None, true, Some(a)) => (1..=a.d()).map(Some).collect(),
        _ => vec![None],
    };

    let points: Vec<Result<Vec<ReportRow>>> = config
        .n
        .par_iter()
        .enumerate()
        .map(|(i, &n)| {
            let t = Instant::now();
            // Two streams per point so coupling can draw its second batch.
            let settings = base.with_stream(2 * i as u32);
            let checks: Vec<(Option<usize>, BoundCheck)> = match kind {
                CheckKind::Coupling => {
                    let (a, b) = (alpha.as_ref().expect("validated"), beta.as_ref().expect("validated"));
                    ks.iter()
                        .map(|&k| Ok((k, coupling_check_with(a, b, k.unwrap_or(1), n, &settings)?)))
                        .collect::<Result<_>>()?
                }
                CheckKind::Claim(claim) => {
                    let source = match &alpha {
                        Some(a) if !claim.is_plancherel() => Source::SchurWeyl(a.clone()),
                        _ => Source::Plancherel,
                    };
                    let mut evidence = Evidence::build(source, n, &settings)
                        .with_context(|| format!("building evidence at n = {n}"))?;
                    ks.iter()
                        .map(|&k| Ok((k, claim.check(&mut evidence, k.unwrap_or(1), settings.max_budget)?)))
                        .collect::<Result<_>>()?
                }
            };
            let wall = t.elapsed().as_secs_f64() * 1e3;
            Ok(checks.into_iter().map(|(k, c)| ReportRow::from_check(n, k, config.seed, c, wall)).collect())
        })
        .collect();

    let mut rows = Vec::new();
    for p in points {
        rows.extend(p?);
    }
    let summary = VerdictSummary::of(rows.iter().map(|r| &r.verdict));
    Ok(ExperimentReport { config: config.clone(), rows, summary, wall_ms: started.elapsed().as_secs_f64() * 1e3 })
}

/// CSV bytes of a report: fixed columns, shortest round-trip floats.
pub fn csv_bytes(report: &ExperimentReport) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in &report.rows {
        w.write_record([
            r.n.to_string(),
            r.k.map(|k| k.to_string()).unwrap_or_default(),
            r.estimate.to_string(),
            r.ci.to_string(),
            r.bound.to_string(),
            r.mode.label().to_string(),
            r.samples.to_string(),
            r.seed.to_string(),
            r.verdict.label().to_string(),
        ])?;
    }
    w.into_inner().context("flushing CSV")
}

/// Path of the JSON sidecar next to the CSV.
pub fn sidecar_path(csv_path: &Path) -> PathBuf {
    csv_path.with_extension("json")
}

/// Writes the CSV to `path` and the JSON sidecar beside it.
pub fn write_report(report: &ExperimentReport, path: &Path) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    std::fs::write(path, csv_bytes(report)?).with_context(|| format!("writing {}", path.display()))?;
    let sidecar = Sidecar {
        config: &report.config,
        columns: CSV_HEADER,
        rows: report.rows.iter().map(|row| SidecarRow { row, wall_ms: row.wall_ms }).collect(),
        summary: report.summary,
        verdict: report.summary.overall(),
        wall_ms: report.wall_ms,
    };
    let json_path = sidecar_path(path);
    let json = serde_json::to_string_pretty(&sidecar)?;
    std::fs::write(&json_path, json).with_context(|| format!("writing {}", json_path.display()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::AlphaSpec;

    fn excess_config() -> ExperimentConfig {
        ExperimentConfig {
            id: "excess".into(),
            check: "excess".into(),
            alpha: Some(AlphaSpec::Explicit { probs: vec![0.75, 0.25] }),
            beta: None,
            n: (1..=8).collect(),
            k: Some(1),
            budget: 1,
            max_budget: None,
            seed: 0,
            output: "unused.csv".into(),
            mode: Mode::Exact,
        }
    }

    #[test]
    fn exact_excess_sweep() {
        let report = run(&excess_config()).unwrap();
        let est: Vec<f64> = report.rows.iter().map(|r| r.estimate).collect();
        assert_eq!(est.len(), 8);
        assert!((est[0] - 0.25).abs() < 1e-15 && (est[1] - 0.3125).abs() < 1e-15);
        assert!(est.windows(2).all(|w| w[0] <= w[1] + 1e-15));
        assert!(est.iter().all(|&e| e <= 0.5));
        assert_eq!(report.summary.overall(), Verdict::Pass);
        let csv = String::from_utf8(csv_bytes(&report).unwrap()).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "n,k,estimate,ci,bound,mode,samples,seed,verdict");
        assert_eq!(lines.next().unwrap(), "1,1,0.25,0,0.5,exact,2,0,pass");
    }

    #[test]
    fn all_rows_when_k_is_omitted() {
        let config = ExperimentConfig { k: None, n: vec![3], ..excess_config() };
        let report = run(&config).unwrap();
        let ks: Vec<Option<usize>> = report.rows.iter().map(|r| r.k).collect();
        assert_eq!(ks, vec![Some(1), Some(2)]);
    }

    #[test]
    fn exact_mode_refuses_large_sweeps() {
        let config = ExperimentConfig { n: vec![40], ..excess_config() };
        assert!(run(&config).is_err());
    }

    #[test]
    fn verdict_summary() {
        let s = VerdictSummary::of(&[Verdict::Pass, Verdict::Inconclusive]);
        assert_eq!(s.overall(), Verdict::Inconclusive);
        let s = VerdictSummary::of(&[Verdict::Fail, Verdict::Inconclusive]);
        assert_eq!(s.overall(), Verdict::Fail);
        assert_eq!(VerdictSummary::of(&[]).overall(), Verdict::Pass);
    }
}
