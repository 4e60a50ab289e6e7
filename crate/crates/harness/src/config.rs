//! Experiment and grid configuration files (JSON).

use anyhow::{bail, Context, Result};
use rand_distr::{Dirichlet, Distribution};
use serde::{Deserialize, Serialize};

use schur_weyl::bounds::{CheckSettings, Claim, Mode};
use schur_weyl::sampling::stream_rng;
use schur_weyl::SortedDist;

/// How the letter distribution is specified.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AlphaSpec {
    /// Weights, sorted and normalized on resolution.
    Explicit {
        probs: Vec<f64>,
    },
    Uniform {
        d: usize,
    },
    /// Weights proportional to `i^(-s)`.
    Zipf {
        d: usize,
        s: f64,
    },
    /// One draw from a symmetric Dirichlet distribution.
    Dirichlet {
        d: usize,
        concentration: f64,
        seed: u64,
    },
}

impl AlphaSpec {
    pub fn resolve(&self) -> Result<SortedDist> {
        let dist = match self {
            AlphaSpec::Explicit { probs } => SortedDist::from_weights(probs)?,
            AlphaSpec::Uniform { d } => SortedDist::uniform(*d)?,
            AlphaSpec::Zipf { d, s } => SortedDist::zipf(*d, *s)?,
            AlphaSpec::Dirichlet { d, concentration, seed } => {
                if *d == 1 {
                    return Ok(SortedDist::uniform(1)?);
                }
                let dir = Dirichlet::new_with_size(*concentration, *d)
                    .map_err(|e| anyhow::anyhow!("dirichlet({d}, {concentration}): {e}"))?;
                let draw: Vec<f64> = dir.sample(&mut stream_rng(*seed, 0));
                SortedDist::from_weights(&draw)?
            }
        };
        Ok(dist)
    }

    /// Short label for tables.
    pub fn label(&self) -> String {
        match self {
            AlphaSpec::Explicit { probs } => {
                let parts: Vec<String> = probs.iter().map(|p| p.to_string()).collect();
                format!("({})", parts.join(","))
            }
            AlphaSpec::Uniform { d } => format!("uniform({d})"),
            AlphaSpec::Zipf { d, s } => format!("zipf({d},{s})"),
            AlphaSpec::Dirichlet { d, concentration, seed } => format!("dirichlet({d},{concentration},{seed})"),
        }
    }
}

fn default_mode() -> Mode {
    Mode::Auto
}

/// One experiment: a claim evaluated along a sweep of `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub id: String,
    /// A claim id such as `excess` or `chi-sq-rate`, or `coupling`.
    pub check: String,
    /// Letter distribution; omitted for Plancherel claims.
    #[serde(default)]
    pub alpha: Option<AlphaSpec>,
    /// Second distribution for `coupling`; must majorize `alpha`.
    #[serde(default)]
    pub beta: Option<AlphaSpec>,
    pub n: Vec<usize>,
    /// Row index; every `1..=d` when omitted.
    #[serde(default)]
    pub k: Option<usize>,
    pub budget: usize,
    /// Ceiling for budget doubling; defaults to `budget`.
    #[serde(default)]
    pub max_budget: Option<usize>,
    pub seed: u64,
    pub output: String,
    #[serde(default = "default_mode")]
    pub mode: Mode,
}

/// The check an experiment runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Claim(Claim),
    Coupling,
}

impl CheckKind {
    pub fn parse(id: &str) -> Result<Self> {
        if id == "coupling" {
            return Ok(CheckKind::Coupling);
        }
        Claim::from_id(id).map(CheckKind::Claim).with_context(|| format!("unknown check `{id}`"))
    }

    pub fn uses_k(self) -> bool {
        match self {
            CheckKind::Claim(c) => c.uses_k(),
            CheckKind::Coupling => true,
        }
    }
}

impl ExperimentConfig {
    pub fn from_path(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let config: Self = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        let kind = CheckKind::parse(&self.check)?;
        if self.n.is_empty() {
            bail!("`n` must list at least one value");
        }
        if self.budget == 0 {
            bail!("`budget` must be at least 1");
        }
        if self.max_budget.is_some_and(|m| m < self.budget) {
            bail!("`max_budget` is below `budget`");
        }
        let needs_alpha = !matches!(kind, CheckKind::Claim(c) if c.is_plancherel());
        match (&self.alpha, needs_alpha) {
            (None, true) => bail!("check `{}` needs `alpha`", self.check),
            (Some(spec), _) => {
                spec.resolve()?;
            }
            _ => {}
        }
        if kind == CheckKind::Coupling && self.beta.is_none() {
            bail!("`coupling` needs `beta`");
        }
        Ok(())
    }

    pub fn kind(&self) -> CheckKind {
        CheckKind::parse(&self.check).expect("validated")
    }

    pub fn settings(&self) -> CheckSettings {
        CheckSettings::new(self.budget, self.seed)
            .with_mode(self.mode)
            .with_max_budget(self.max_budget.unwrap_or(self.budget))
    }
}

/// A grid of distributions and sizes for one claim, rendered as a table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    #[serde(default)]
    pub alphas: Vec<AlphaSpec>,
    #[serde(default)]
    pub n: Vec<usize>,
    #[serde(default)]
    pub k: Option<usize>,
    pub budget: usize,
    #[serde(default)]
    pub max_budget: Option<usize>,
    pub seed: u64,
    #[serde(default = "default_mode")]
    pub mode: Mode,
}

impl GridConfig {
    pub fn from_path(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let grid: Self = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        if grid.budget == 0 {
            bail!("`budget` must be at least 1");
        }
        Ok(grid)
    }

    pub fn settings(&self) -> CheckSettings {
        CheckSettings::new(self.budget, self.seed)
            .with_mode(self.mode)
            .with_max_budget(self.max_budget.unwrap_or(self.budget))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_minimal_config() {
        let text = r#"{
            "id": "excess-small",
            "check": "excess",
            "alpha": {"kind": "explicit", "probs": [0.25, 0.75]},
            "n": [1, 2, 3],
            "k": 1,
            "budget": 1,
            "seed": 0,
            "output": "out.csv",
            "mode": "exact"
        }"#;
        let c: ExperimentConfig = serde_json::from_str(text).unwrap();
        c.validate().unwrap();
        assert_eq!(c.alpha.unwrap().resolve().unwrap().probs(), &[0.75, 0.25]);
        assert_eq!(c.mode, Mode::Exact);
    }

    #[test]
    fn rejects_bad_configs() {
        let base = ExperimentConfig {
            id: "x".into(),
            check: "excess".into(),
            alpha: Some(AlphaSpec::Uniform { d: 2 }),
            beta: None,
            n: vec![1],
            k: None,
            budget: 1,
            max_budget: None,
            seed: 0,
            output: "x.csv".into(),
            mode: Mode::Auto,
        };
        assert!(base.validate().is_ok());
        assert!(ExperimentConfig { n: vec![], ..base.clone() }.validate().is_err());
        assert!(ExperimentConfig { budget: 0, ..base.clone() }.validate().is_err());
        assert!(ExperimentConfig { check: "nope".into(), ..base.clone() }.validate().is_err());
        assert!(ExperimentConfig { alpha: None, ..base.clone() }.validate().is_err());
        assert!(ExperimentConfig { check: "coupling".into(), ..base.clone() }.validate().is_err());
        let lis = ExperimentConfig { check: "plancherel-lis".into(), alpha: None, ..base };
        assert!(lis.validate().is_ok());
    }

    #[test]
    fn dirichlet_is_reproducible() {
        let spec = AlphaSpec::Dirichlet { d: 5, concentration: 1.0, seed: 11 };
        let a = spec.resolve().unwrap();
        assert_eq!(a, spec.resolve().unwrap());
        assert_eq!(a.d(), 5);
    }
}
