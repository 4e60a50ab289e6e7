//! One claim evaluated over a grid of distributions and sizes.

use anyhow::{bail, Result};
use rayon::prelude::*;
use serde::Serialize;

use schur_weyl::bounds::{Claim, Evidence, Mode, Source, Verdict};

use crate::config::GridConfig;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub alpha: String,
    pub d: usize,
    pub n: usize,
    pub k: Option<usize>,
    pub estimate: f64,
    pub ci: f64,
    pub bound: f64,
    pub mode: Mode,
    pub samples: u64,
    pub verdict: Verdict,
}

/// Evaluates `claim_id` at every `(alpha, n)` of the grid, and at every row
/// index when the claim depends on one and `k` is not fixed. Plancherel
/// claims ignore `alphas`.
pub fn run_table(claim_id: &str, grid: &GridConfig) -> Result<Vec<TableRow>> {
    let claim = match Claim::from_id(claim_id) {
        Ok(c) => c,
        Err(_) if claim_id == "coupling" => bail!("`coupling` needs two distributions; use an experiment"),
        Err(e) => bail!(e),
    };
    let sources: Vec<(String, Source)> = if claim.is_plancherel() {
        vec![("plancherel".into(), Source::Plancherel)]
    } else {
        grid.alphas.iter().map(|a| Ok((a.label(), Source::SchurWeyl(a.resolve()?)))).collect::<Result<_>>()?
    };
    let points: Vec<(usize, &(String, Source), usize)> = sources
        .iter()
        .flat_map(|s| grid.n.iter().map(move |&n| (s, n)))
        .enumerate()
        .map(|(i, (s, n))| (i, s, n))
        .collect();
    let base = grid.settings();
    let tables: Vec<Result<Vec<TableRow>>> = points
        .par_iter()
        .map(|&(i, (label, source), n)| {
            let d = source.alpha().map_or(0, |a| a.d());
            let ks: Vec<Option<usize>> = match grid.k {
                Some(k) if claim.uses_k() => vec![Some(k)],
                None if claim.uses_k() => (1..=d).map(Some).collect(),
                _ => vec![None],
            };
            let settings = base.with_stream(i as u32);
            let mut evidence = Evidence::build(source.clone(), n, &settings)?;
            ks.into_iter()
                .map(|k| {
                    let c = claim.check(&mut evidence, k.unwrap_or(1), settings.max_budget)?;
                    Ok(TableRow {
                        alpha: label.clone(),
                        d,
                        n,
                        k,
                        estimate: c.estimate,
                        ci: c.radius,
                        bound: c.bound,
                        mode: c.mode,
                        samples: c.samples,
                        verdict: c.verdict,
                    })
                })
                .collect()
        })
        .collect();
    let mut rows = Vec::new();
    for t in tables {
        rows.extend(t?);
    }
    Ok(rows)
}

/// Markdown table.
pub fn render(claim_id: &str, rows: &[TableRow]) -> String {
    let mut out = format!("claim: {claim_id}\n\n");
    out.push_str("| alpha | d | n | k | estimate | ci | bound | mode | samples | verdict |\n");
    out.push_str("|---|---|---|---|---|---|---|---|---|---|\n");
    for r in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {:.6} | {:.6} | {:.6} | {} | {} | {} |\n",
            r.alpha,
            r.d,
            r.n,
            r.k.map(|k| k.to_string()).unwrap_or_else(|| "-".into()),
            r.estimate,
            r.ci,
            r.bound,
            r.mode.label(),
            r.samples,
            r.verdict.label(),
        ));
    }
    out
}
