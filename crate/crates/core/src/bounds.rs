//! Closed-form bounds on the Schur–Weyl distribution, the deterministic
//! inequalities behind them, and the machinery that checks a bound
//! against an exact or Monte Carlo estimate.
//!
//! A [`BoundCheck`] has a three-valued [`Verdict`]. Monte Carlo estimates
//! come with a 95% normal confidence radius, and a check only fails when the
//! whole interval lies on the wrong side of the bound. When the bound falls
//! inside the interval, the sample budget is doubled until it reaches the
//! configured maximum; if it is still undecided, the verdict is
//! [`Verdict::Inconclusive`].

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics;
use crate::partitions::{SortedDist, YoungDiagram};
use crate::sampling::{exact_sw_law, plancherel_with, stream_rng, WordSampler, WORD_CAP};

/// Two-sided 95% normal quantile.
pub const Z95: f64 = 1.959_963_984_540_054;

/// Slack allowed when an exact value is compared with a bound.
pub const EXACT_TOLERANCE: f64 = 1e-12;

/// Tolerance of the deterministic inequality checks.
pub const INEQUALITY_TOLERANCE: f64 = 1e-12;

/// Default starting sample count of a Monte Carlo check.
pub const DEFAULT_BUDGET: usize = 10_000;

/// Default ceiling for budget doubling.
pub const DEFAULT_MAX_BUDGET: usize = 1_000_000;

/// Samples drawn from one RNG stream.
pub const CHUNK: usize = 256;

// ---------------------------------------------------------------------------
// Closed forms

/// `e_k(α) = Σ_{i ≤ k < j} α_j / (α_i − α_j)`.
///
/// Zero when `k ≥ d`; `+∞` when `α_k = α_{k+1} > 0`.
pub fn itw(alpha: &SortedDist, k: usize) -> f64 {
    let a = alpha.probs();
    let d = a.len();
    if k == 0 || k >= d {
        return 0.0;
    }
    if a[k - 1] == a[k] && a[k] > 0.0 {
        return f64::INFINITY;
    }
    let mut total = 0.0;
    for &ai in &a[..k] {
        for &aj in &a[k..] {
            if aj > 0.0 {
                total += aj / (ai - aj);
            }
        }
    }
    total
}

/// `k (α_{k+1} + ... + α_d) / (α_k − α_{k+1})`, an upper bound on [`itw`]
/// that is accurate when the gap is large.
pub fn itw_trivial_bound(alpha: &SortedDist, k: usize) -> Result<f64> {
    let d = alpha.d();
    if k == 0 || k > d {
        return Err(Error::IndexOutOfRange { index: k, len: d });
    }
    if k == d {
        return Ok(0.0);
    }
    let gap = alpha.get(k) - alpha.get(k + 1);
    if gap <= 0.0 {
        return Err(Error::Precondition(format!("zero gap between rows {k} and {}", k + 1)));
    }
    Ok(k as f64 * alpha.tail(k) / gap)
}

/// Two-sided bounds on `E λ_k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RowMeanBounds {
    /// `α_k n ± 2√(ν_k n)` with `ν_k = min{1, α_k d}`.
    pub lower: f64,
    pub upper: f64,
    /// `α_k n − 2√(α_k k n)`.
    pub sharp_lower: f64,
    /// `α_k n + 2√((α_k + ... + α_d) n)`.
    pub sharp_upper: f64,
}

pub fn row_mean_bounds(alpha: &SortedDist, k: usize, n: usize) -> RowMeanBounds {
    let d = alpha.d() as f64;
    let ak = alpha.get(k);
    let n = n as f64;
    let nu = (ak * d).min(1.0);
    let center = ak * n;
    RowMeanBounds {
        lower: center - 2.0 * (nu * n).sqrt(),
        upper: center + 2.0 * (nu * n).sqrt(),
        sharp_lower: center - 2.0 * (ak * k as f64 * n).sqrt(),
        sharp_upper: center + 2.0 * (alpha.tail(k.saturating_sub(1)) * n).sqrt(),
    }
}

/// `α_1 n + 2√n`.
pub fn first_row_upper(alpha: &SortedDist, n: usize) -> f64 {
    alpha.get(1) * n as f64 + 2.0 * (n as f64).sqrt()
}

/// `α_d n − 2√(α_d d n)`.
pub fn last_row_lower(alpha: &SortedDist, n: usize) -> f64 {
    let d = alpha.d();
    let ad = alpha.get(d);
    ad * n as f64 - 2.0 * (ad * d as f64 * n as f64).sqrt()
}

/// `42 α_k k n + 42 (α_k + ... + α_d) n`, the bound on `E (λ_k − α_k n)²`.
pub fn mean_squared_bound(alpha: &SortedDist, k: usize, n: usize) -> f64 {
    let n = n as f64;
    42.0 * alpha.get(k) * k as f64 * n + 42.0 * alpha.tail(k.saturating_sub(1)) * n
}

/// `16 n`, the bound on `Var λ_k`.
pub fn variance_bound(n: usize) -> f64 {
    16.0 * n as f64
}

/// `2k / √n`, the bound on `E[(λ_1 + ... + λ_k)/n] − (α_1 + ... + α_k)`.
pub fn normalized_excess_bound(k: usize, n: usize) -> f64 {
    2.0 * k as f64 / (n as f64).sqrt()
}

/// `[H(α) − 3d²/(2n), H(α)]`, the window for `E H(λ/n)`.
pub fn entropy_window(alpha: &SortedDist, n: usize) -> (f64, f64) {
    let h = metrics::shannon_entropy(alpha.probs());
    let d = alpha.d() as f64;
    (h - 3.0 * d * d / (2.0 * n as f64), h)
}

/// Moves mass `g` onto the first entry, taking it from the smallest entries
/// first. The result majorizes `alpha` and its second entry is at most
/// `α_2`.
pub fn lift_first_row(alpha: &SortedDist, g: f64) -> Result<SortedDist> {
    if !(0.0..=1.0 - alpha.get(1)).contains(&g) {
        return Err(Error::Precondition(format!("cannot lift the first entry by {g}")));
    }
    let mut p = alpha.probs().to_vec();
    let mut need = g;
    for i in (1..p.len()).rev() {
        let take = need.min(p[i]);
        p[i] -= take;
        need -= take;
        if need <= 0.0 {
            break;
        }
    }
    p[0] += g - need.max(0.0);
    SortedDist::from_weights(&p)
}

/// Moves mass `g` from the last entry onto the first. The result majorizes
/// `alpha` and leaves the other entries alone.
pub fn drain_last_row(alpha: &SortedDist, g: f64) -> Result<SortedDist> {
    let d = alpha.d();
    if d < 2 || !(0.0..=alpha.get(d)).contains(&g) {
        return Err(Error::Precondition(format!("cannot drain {g} from the last entry")));
    }
    let mut p = alpha.probs().to_vec();
    p[d - 1] -= g;
    p[0] += g;
    SortedDist::from_weights(&p)
}

// ---------------------------------------------------------------------------
// Deterministic inequalities

fn require_permutation(alpha: &[f64], beta: &[f64]) -> Result<()> {
    if alpha.len() != beta.len() {
        return Err(Error::LengthMismatch { left: alpha.len(), right: beta.len() });
    }
    let mut a = alpha.to_vec();
    let mut b = beta.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    if a != b {
        return Err(Error::Precondition("beta is not a permutation of alpha".into()));
    }
    Ok(())
}

fn require_sorted_nonnegative(alpha: &[f64], strictly_positive: bool) -> Result<()> {
    if alpha.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Unsorted(format!("{alpha:?}")));
    }
    if let Some(&x) = alpha.iter().find(|&&x| x < 0.0 || (strictly_positive && x <= 0.0)) {
        return Err(Error::NegativeEntry(x));
    }
    Ok(())
}

/// `2 Σ_{j<d} ((α_j − α_{j+1}) / α_j) Σ_{i≤j} (α_i − β_i)`.
pub fn rearrangement_rhs(alpha: &[f64], beta: &[f64]) -> Result<f64> {
    require_sorted_nonnegative(alpha, true)?;
    require_permutation(alpha, beta)?;
    let mut prefix = 0.0;
    let mut total = 0.0;
    for j in 0..alpha.len().saturating_sub(1) {
        prefix += alpha[j] - beta[j];
        total += (alpha[j] - alpha[j + 1]) / alpha[j] * prefix;
    }
    Ok(2.0 * total)
}

/// `Σ (√α_i − √β_i)² ≤` [`rearrangement_rhs`].
pub fn check_rearrangement(alpha: &[f64], beta: &[f64]) -> Result<bool> {
    let rhs = rearrangement_rhs(alpha, beta)?;
    let lhs = metrics::hellinger_sq(alpha, beta, alpha.len())?;
    Ok(lhs <= rhs + INEQUALITY_TOLERANCE)
}

/// `Σ_{i<d} (α_i − α_{i+1}) / α_i`.
pub fn log_sum(alpha: &[f64]) -> f64 {
    alpha.windows(2).map(|w| (w[0] - w[1]) / w[0]).sum()
}

/// `log_sum(α) ≤ min{d, ln(α_1/α_d)}` for sorted positive `α`.
pub fn log_sum_bound(alpha: &[f64]) -> Result<bool> {
    require_sorted_nonnegative(alpha, true)?;
    if alpha.is_empty() {
        return Ok(true);
    }
    let cap = (alpha.len() as f64).min((alpha[0] / alpha[alpha.len() - 1]).ln());
    Ok(log_sum(alpha) <= cap + INEQUALITY_TOLERANCE)
}

/// Right-hand side of the thresholded rearrangement bound:
/// `4 Σ_{j≤k} ((α'_j − α'_{j+1}) / α'_j) Σ_{i≤j} (α_i − β_i) + dζ + 8kLζ`,
/// where `k` is the index with `α_k > ζ ≥ α_{k+1}`, `α'` agrees with `α`
/// up to `k` and has `α'_{k+1} = ζ`, and `L = min{k, ln(α_1/ζ)}`.
pub fn thresholded_rearrangement_rhs(alpha: &[f64], beta: &[f64], zeta: f64) -> Result<f64> {
    require_sorted_nonnegative(alpha, false)?;
    require_permutation(alpha, beta)?;
    let d = alpha.len();
    let k = (1..d)
        .find(|&k| alpha[k - 1] > zeta && zeta >= alpha[k])
        .ok_or_else(|| Error::Precondition(format!("no k with α_k > {zeta} ≥ α_(k+1)")))?;
    let lifted = |j: usize| if j < k { alpha[j] } else { zeta };
    let mut prefix = 0.0;
    let mut total = 0.0;
    for j in 0..k {
        prefix += alpha[j] - beta[j];
        total += (lifted(j) - lifted(j + 1)) / lifted(j) * prefix;
    }
    let l = if zeta > 0.0 { (k as f64).min((alpha[0] / zeta).ln()) } else { k as f64 };
    Ok(4.0 * total + d as f64 * zeta + 8.0 * k as f64 * l * zeta)
}

pub fn thresholded_rearrangement_check(alpha: &[f64], beta: &[f64], zeta: f64) -> Result<bool> {
    let rhs = thresholded_rearrangement_rhs(alpha, beta, zeta)?;
    let lhs = metrics::hellinger_sq(alpha, beta, alpha.len())?;
    Ok(lhs <= rhs + INEQUALITY_TOLERANCE)
}

// ---------------------------------------------------------------------------
// Evidence: exact laws and sample batches

/// Where diagrams come from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Source {
    /// `SW(n, α)`.
    SchurWeyl(SortedDist),
    /// RSK shape of a uniform permutation.
    Plancherel,
}

impl Source {
    pub fn alpha(&self) -> Option<&SortedDist> {
        match self {
            Source::SchurWeyl(a) => Some(a),
            Source::Plancherel => None,
        }
    }
}

/// How an estimate was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Exact when enumeration fits under the cap, Monte Carlo otherwise.
    Auto,
    Exact,
    #[serde(rename = "mc")]
    MonteCarlo,
}

impl Mode {
    pub fn label(self) -> &'static str {
        match self {
            Mode::Auto => "auto",
            Mode::Exact => "exact",
            Mode::MonteCarlo => "mc",
        }
    }
}

/// Sampling parameters shared by the checkers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CheckSettings {
    pub budget: usize,
    pub max_budget: usize,
    pub seed: u64,
    /// Stream family; chunk `c` draws from stream `(stream << 32) | c`.
    pub stream: u32,
    pub mode: Mode,
    /// Largest `d^n` enumerated in [`Mode::Auto`] and [`Mode::Exact`].
    pub exact_cap: u128,
}

impl CheckSettings {
    pub fn new(budget: usize, seed: u64) -> Self {
        Self {
            budget,
            max_budget: budget.max(DEFAULT_MAX_BUDGET),
            seed,
            stream: 0,
            mode: Mode::Auto,
            exact_cap: WORD_CAP,
        }
    }

    pub fn with_stream(mut self, stream: u32) -> Self {
        self.stream = stream;
        self
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_max_budget(mut self, max_budget: usize) -> Self {
        self.max_budget = max_budget.max(self.budget);
        self
    }
}

impl Default for CheckSettings {
    fn default() -> Self {
        Self::new(DEFAULT_BUDGET, 0)
    }
}

/// A growable, reproducible batch of sampled diagrams.
///
/// Sample `i` always comes from chunk `i / CHUNK`, whose generator depends
/// only on `(seed, stream, chunk)`. Batches are therefore identical however
/// they are grown and however many threads generate them.
#[derive(Debug, Clone)]
pub struct ShapeBatch {
    source: Source,
    sampler: Option<WordSampler>,
    n: usize,
    seed: u64,
    stream: u32,
    shapes: Vec<YoungDiagram>,
}

impl ShapeBatch {
    pub fn new(source: Source, n: usize, seed: u64, stream: u32) -> Result<Self> {
        let sampler = match &source {
            Source::SchurWeyl(alpha) => Some(WordSampler::new(alpha)?),
            Source::Plancherel => None,
        };
        Ok(Self { source, sampler, n, seed, stream, shapes: Vec::new() })
    }

    pub fn shapes(&self) -> &[YoungDiagram] {
        &self.shapes
    }

    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    /// Grows the batch to `count` samples.
    pub fn extend_to(&mut self, count: usize) {
        if count <= self.shapes.len() {
            return;
        }
        let have = self.shapes.len();
        let first_chunk = have / CHUNK;
        let last_chunk = count.div_ceil(CHUNK);
        let fresh: Vec<Vec<YoungDiagram>> = (first_chunk..last_chunk)
            .into_par_iter()
            .map(|c| {
                let mut rng = stream_rng(self.seed, (u64::from(self.stream) << 32) | c as u64);
                let start = c * CHUNK;
                let end = ((c + 1) * CHUNK).min(count);
                (start..end)
                    .map(|_| match &self.sampler {
                        Some(s) => s.sample_shape(self.n, &mut rng),
                        None => plancherel_with(self.n, &mut rng),
                    })
                    .collect()
            })
            .collect();
        // The first chunk may be partially present already; regenerate it
        // and keep only the missing tail.
        let skip = have - first_chunk * CHUNK;
        self.shapes.extend(fresh.into_iter().flatten().skip(skip));
        debug_assert_eq!(self.shapes.len(), count);
    }
}

/// Either the exact law of the diagram or a sample batch.
#[derive(Debug, Clone)]
pub enum Evidence {
    Exact { source: Source, n: usize, law: Vec<(YoungDiagram, f64)> },
    Sampled(ShapeBatch),
}

impl Evidence {
    /// Exact when the settings allow it and `d^n` is under the cap,
    /// otherwise a batch of `settings.budget` samples.
    pub fn build(source: Source, n: usize, settings: &CheckSettings) -> Result<Self> {
        let exact_possible = match &source {
            Source::SchurWeyl(alpha) => (alpha.d() as f64).powi(n as i32) <= settings.exact_cap as f64,
            Source::Plancherel => false,
        };
        match (settings.mode, exact_possible) {
            (Mode::Exact, false) => Err(match &source {
                Source::Plancherel => Error::Precondition("no exact route for Plancherel".into()),
                Source::SchurWeyl(alpha) => Error::CapExceeded {
                    requested: (alpha.d() as u128).saturating_pow(n as u32),
                    cap: settings.exact_cap,
                },
            }),
            (Mode::Exact | Mode::Auto, true) => {
                let alpha = source.alpha().expect("exact route needs α");
                let law = exact_sw_law(alpha, n, settings.exact_cap)?;
                Ok(Evidence::Exact { source, n, law })
            }
            _ => {
                let mut batch = ShapeBatch::new(source, n, settings.seed, settings.stream)?;
                batch.extend_to(settings.budget.max(1));
                Ok(Evidence::Sampled(batch))
            }
        }
    }

    pub fn source(&self) -> &Source {
        match self {
            Evidence::Exact { source, .. } => source,
            Evidence::Sampled(b) => &b.source,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Evidence::Exact { n, .. } => *n,
            Evidence::Sampled(b) => b.n,
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            Evidence::Exact { .. } => Mode::Exact,
            Evidence::Sampled(_) => Mode::MonteCarlo,
        }
    }

    /// Number of words behind the estimate (`d^n` when exact).
    pub fn samples(&self) -> u64 {
        match self {
            Evidence::Exact { source, n, .. } => source.alpha().map_or(0, |a| (a.d() as u64).saturating_pow(*n as u32)),
            Evidence::Sampled(b) => b.len() as u64,
        }
    }

    fn grow(&mut self, max_budget: usize) -> bool {
        match self {
            Evidence::Sampled(b) if b.len() < max_budget => {
                let next = (b.len() * 2).min(max_budget);
                b.extend_to(next);
                true
            }
            _ => false,
        }
    }
}

// ---------------------------------------------------------------------------
// Verdicts

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// Which side of the bound the quantity must lie on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    AtMost,
    AtLeast,
}

/// An estimate compared against a bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCheck {
    pub claim: String,
    pub estimate: f64,
    /// Half-width of the 95% confidence interval; zero when exact.
    pub radius: f64,
    pub bound: f64,
    pub direction: Direction,
    pub samples: u64,
    pub mode: Mode,
    pub verdict: Verdict,
}

/// The CI decision rule. An exact estimate has `radius = 0` and is compared
/// with [`EXACT_TOLERANCE`] of slack.
pub fn decide(estimate: f64, radius: f64, bound: f64, direction: Direction) -> Verdict {
    // Signed amount by which the estimate violates the bound.
    let violation = match direction {
        Direction::AtMost => estimate - bound,
        Direction::AtLeast => bound - estimate,
    };
    if violation == f64::NEG_INFINITY || violation.is_nan() && bound.is_infinite() {
        return Verdict::Pass;
    }
    let slack = EXACT_TOLERANCE * (1.0 + bound.abs());
    if violation - radius > slack {
        Verdict::Fail
    } else if violation + radius <= slack {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    }
}

/// Mean and 95% radius of a sample.
pub fn mean_with_radius(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    if values.is_empty() {
        return (f64::NAN, f64::INFINITY);
    }
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, f64::INFINITY);
    }
    let var = values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, Z95 * (var / n).sqrt())
}

/// Unbiased sample variance and a 95% radius from the fourth central moment.
pub fn variance_with_radius(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    if values.len() < 2 {
        return (f64::NAN, f64::INFINITY);
    }
    let mean = values.iter().sum::<f64>() / n;
    let m2 = values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    let m4 = values.iter().map(|x| (x - mean).powi(4)).sum::<f64>() / n;
    let var = m2 * n / (n - 1.0);
    (var, Z95 * ((m4 - m2 * m2).max(0.0) / n).sqrt())
}

/// Which statistic of `F(λ)` is estimated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    Mean,
    Variance,
}

/// Estimates the mean (or variance) of `f(λ)` and compares it with `bound`,
/// doubling the sample until the verdict is decided or `max_budget` is hit.
pub fn check_statistic<F>(
    claim: &str,
    evidence: &mut Evidence,
    statistic: Statistic,
    f: F,
    bound: f64,
    direction: Direction,
    max_budget: usize,
) -> BoundCheck
where
    F: Fn(&YoungDiagram) -> f64 + Sync,
{
    loop {
        let (estimate, radius) = match &*evidence {
            Evidence::Exact { law, .. } => {
                let mean: f64 = law.iter().map(|(l, p)| p * f(l)).sum();
                match statistic {
                    Statistic::Mean => (mean, 0.0),
                    Statistic::Variance => {
                        let second: f64 = law.iter().map(|(l, p)| p * f(l).powi(2)).sum();
                        (second - mean * mean, 0.0)
                    }
                }
            }
            Evidence::Sampled(batch) => {
                let values: Vec<f64> = batch.shapes().iter().map(&f).collect();
                match statistic {
                    Statistic::Mean => mean_with_radius(&values),
                    Statistic::Variance => variance_with_radius(&values),
                }
            }
        };
        let verdict = decide(estimate, radius, bound, direction);
        if verdict == Verdict::Inconclusive && evidence.grow(max_budget) {
            continue;
        }
        return BoundCheck {
            claim: claim.to_string(),
            estimate,
            radius,
            bound,
            direction,
            samples: evidence.samples(),
            mode: evidence.mode(),
            verdict,
        };
    }
}

// ---------------------------------------------------------------------------
// Claims

/// Distances between `λ/n` and `α` with a proven rate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceMetric {
    /// `E χ²(λ/n, α) ≤ d²/n`.
    ChiSq,
    /// `E H²(λ/n, α) ≤ d²/n`.
    HellingerSq,
    /// `E KL(λ/n ‖ α) ≤ d²/n`.
    Kl,
    /// `E ‖λ/n − α‖₂² ≤ d/n`.
    L2Sq,
    /// `E ‖λ/n − α‖₁ ≤ d/√n`.
    L1,
    /// `E ℓ₂²` on the first `k` rows `≤ 46k/n`.
    TruncL2Sq,
    /// `E H²` on the first `k` rows `≤ 46kd/n`.
    TruncHellingerSq,
    /// `E χ²` on the first `k` rows `≤ 46kd/n`.
    TruncChiSq,
    /// `E ℓ₁` on the first `k` rows `≤ (1.92k + 0.5)/√n`.
    TruncL1,
    /// `E ℓ₁` on the first `k` rows `≤ (1.5k + 0.5)/√n`.
    TruncL1Improved,
}

impl DistanceMetric {
    pub const ALL: [DistanceMetric; 10] = [
        DistanceMetric::ChiSq,
        DistanceMetric::HellingerSq,
        DistanceMetric::Kl,
        DistanceMetric::L2Sq,
        DistanceMetric::L1,
        DistanceMetric::TruncL2Sq,
        DistanceMetric::TruncHellingerSq,
        DistanceMetric::TruncChiSq,
        DistanceMetric::TruncL1,
        DistanceMetric::TruncL1Improved,
    ];

    pub fn id(self) -> &'static str {
        match self {
            DistanceMetric::ChiSq => "chi-sq",
            DistanceMetric::HellingerSq => "hellinger-sq",
            DistanceMetric::Kl => "kl",
            DistanceMetric::L2Sq => "l2-sq",
            DistanceMetric::L1 => "l1",
            DistanceMetric::TruncL2Sq => "trunc-l2-sq",
            DistanceMetric::TruncHellingerSq => "trunc-hellinger-sq",
            DistanceMetric::TruncChiSq => "trunc-chi-sq",
            DistanceMetric::TruncL1 => "trunc-l1",
            DistanceMetric::TruncL1Improved => "trunc-l1-improved",
        }
    }

    pub fn from_id(id: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.id() == id)
            .ok_or_else(|| Error::Precondition(format!("unknown metric `{id}`")))
    }

    /// Whether the metric looks only at the first `k` rows.
    pub fn is_truncated(self) -> bool {
        matches!(
            self,
            DistanceMetric::TruncL2Sq
                | DistanceMetric::TruncHellingerSq
                | DistanceMetric::TruncChiSq
                | DistanceMetric::TruncL1
                | DistanceMetric::TruncL1Improved
        )
    }

    /// The distance between a normalized diagram and `α` (both length `d`).
    pub fn value(self, normalized: &[f64], alpha: &[f64], k: usize) -> f64 {
        let d = alpha.len();
        let r = match self {
            DistanceMetric::ChiSq => metrics::chi_sq(normalized, alpha, d),
            DistanceMetric::HellingerSq => metrics::hellinger_sq(normalized, alpha, d),
            DistanceMetric::Kl => metrics::kl(normalized, alpha),
            DistanceMetric::L2Sq => metrics::l2_sq(normalized, alpha, d),
            DistanceMetric::L1 => metrics::l1(normalized, alpha),
            DistanceMetric::TruncL2Sq => metrics::l2_sq(normalized, alpha, k),
            DistanceMetric::TruncHellingerSq => metrics::hellinger_sq(normalized, alpha, k),
            DistanceMetric::TruncChiSq => metrics::chi_sq(normalized, alpha, k),
            DistanceMetric::TruncL1 | DistanceMetric::TruncL1Improved => metrics::l1_truncated(normalized, alpha, k),
        };
        r.expect("normalized diagram and α have matching lengths")
    }

    /// The proven rate.
    pub fn bound(self, d: usize, k: usize, n: usize) -> f64 {
        let (d, k, n) = (d as f64, k as f64, n as f64);
        match self {
            DistanceMetric::ChiSq | DistanceMetric::HellingerSq | DistanceMetric::Kl => d * d / n,
            DistanceMetric::L2Sq => d / n,
            DistanceMetric::L1 => d / n.sqrt(),
            DistanceMetric::TruncL2Sq => 46.0 * k / n,
            DistanceMetric::TruncHellingerSq | DistanceMetric::TruncChiSq => 46.0 * k * d / n,
            DistanceMetric::TruncL1 => (1.92 * k + 0.5) / n.sqrt(),
            DistanceMetric::TruncL1Improved => (1.5 * k + 0.5) / n.sqrt(),
        }
    }
}

/// A checkable expectation-level statement about one row index `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// `E[λ_1 + ... + λ_k] − (α_1 + ... + α_k) n ≤ e_k(α)`.
    Excess,
    /// `E[(λ_1 + ... + λ_k)/n] − (α_1 + ... + α_k) ≤ 2k/√n`.
    ExcessNormalized,
    RowMeanUpper,
    RowMeanLower,
    RowMeanUpperSharp,
    RowMeanLowerSharp,
    /// `E λ_1 ≤ α_1 n + 2√n` (ignores `k`).
    FirstRowUpper,
    /// `E λ_d ≥ α_d n − 2√(α_d d n)` (ignores `k`).
    LastRowLower,
    /// `Var λ_k ≤ 16n`.
    Variance,
    /// `E (λ_k − α_k n)² ≤ 42 α_k k n + 42 (α_k + ... + α_d) n`.
    MeanSquared,
    Distance(DistanceMetric),
    /// `E H(λ/n) ≤ H(α)`.
    EntropyUpper,
    /// `E H(λ/n) ≥ H(α) − 3d²/(2n)`.
    EntropyLower,
    /// Plancherel: `E λ_1 ≤ 2√n`.
    PlancherelLis,
}

impl Claim {
    pub fn id(self) -> String {
        match self {
            Claim::Excess => "excess".into(),
            Claim::ExcessNormalized => "excess-normalized".into(),
            Claim::RowMeanUpper => "row-mean-upper".into(),
            Claim::RowMeanLower => "row-mean-lower".into(),
            Claim::RowMeanUpperSharp => "row-mean-upper-sharp".into(),
            Claim::RowMeanLowerSharp => "row-mean-lower-sharp".into(),
            Claim::FirstRowUpper => "first-row-upper".into(),
            Claim::LastRowLower => "last-row-lower".into(),
            Claim::Variance => "variance".into(),
            Claim::MeanSquared => "mean-squared".into(),
            Claim::Distance(m) => format!("{}-rate", m.id()),
            Claim::EntropyUpper => "entropy-upper".into(),
            Claim::EntropyLower => "entropy-lower".into(),
            Claim::PlancherelLis => "plancherel-lis".into(),
        }
    }

    /// Every claim, in a fixed order.
    pub fn all() -> Vec<Claim> {
        let mut out = vec![
            Claim::Excess,
            Claim::ExcessNormalized,
            Claim::RowMeanUpper,
            Claim::RowMeanLower,
            Claim::RowMeanUpperSharp,
            Claim::RowMeanLowerSharp,
            Claim::FirstRowUpper,
            Claim::LastRowLower,
            Claim::Variance,
            Claim::MeanSquared,
        ];
        out.extend(DistanceMetric::ALL.into_iter().map(Claim::Distance));
        out.extend([Claim::EntropyUpper, Claim::EntropyLower, Claim::PlancherelLis]);
        out
    }

    pub fn from_id(id: &str) -> Result<Self> {
        Self::all()
            .into_iter()
            .find(|c| c.id() == id)
            .ok_or_else(|| Error::Precondition(format!("unknown claim `{id}`")))
    }

    /// Whether the claim varies with the row index `k`.
    pub fn uses_k(self) -> bool {
        match self {
            Claim::FirstRowUpper
            | Claim::LastRowLower
            | Claim::EntropyUpper
            | Claim::EntropyLower
            | Claim::PlancherelLis => false,
            Claim::Distance(m) => m.is_truncated(),
            _ => true,
        }
    }

    /// Whether the claim is about Plancherel diagrams rather than `SW(n, α)`.
    pub fn is_plancherel(self) -> bool {
        self == Claim::PlancherelLis
    }

    /// Checks the claim at row index `k` against `evidence`.
    pub fn check(self, evidence: &mut Evidence, k: usize, max_budget: usize) -> Result<BoundCheck> {
        let n = evidence.n();
        let id = self.id();
        if self.is_plancherel() {
            let bound = 2.0 * (n as f64).sqrt();
            return Ok(check_statistic(
                &id,
                evidence,
                Statistic::Mean,
                |l| l.row(1) as f64,
                bound,
                Direction::AtMost,
                max_budget,
            ));
        }
        let alpha = evidence
            .source()
            .alpha()
            .cloned()
            .ok_or_else(|| Error::Precondition(format!("claim `{id}` needs a Schur–Weyl source")))?;
        let d = alpha.d();
        if self.uses_k() && (k == 0 || k > d) {
            return Err(Error::IndexOutOfRange { index: k, len: d });
        }
        if n == 0 && !matches!(self, Claim::Excess | Claim::Variance | Claim::MeanSquared) {
            return Err(Error::Precondition(format!("claim `{id}` needs n > 0")));
        }
        let nf = n as f64;
        let ak = alpha.get(k);
        let normalized = |l: &YoungDiagram| -> Vec<f64> {
            let mut v: Vec<f64> = l.rows().iter().map(|&r| r as f64 / nf).collect();
            v.resize(d, 0.0);
            v
        };
        use Direction::{AtLeast, AtMost};
        use Statistic::{Mean, Variance};
        let rows = row_mean_bounds(&alpha, k, n);
        let out = match self {
            Claim::Excess => {
                let shift = alpha.prefix(k) * nf;
                check_statistic(&id, evidence, Mean, |l| l.prefix(k) as f64 - shift, itw(&alpha, k), AtMost, max_budget)
            }
            Claim::ExcessNormalized => {
                let shift = alpha.prefix(k);
                check_statistic(
                    &id,
                    evidence,
                    Mean,
                    |l| l.prefix(k) as f64 / nf - shift,
                    normalized_excess_bound(k, n),
                    AtMost,
                    max_budget,
                )
            }
            Claim::RowMeanUpper => {
                check_statistic(&id, evidence, Mean, |l| l.row(k) as f64, rows.upper, AtMost, max_budget)
            }
            Claim::RowMeanLower => {
                check_statistic(&id, evidence, Mean, |l| l.row(k) as f64, rows.lower, AtLeast, max_budget)
            }
            Claim::RowMeanUpperSharp => {
                check_statistic(&id, evidence, Mean, |l| l.row(k) as f64, rows.sharp_upper, AtMost, max_budget)
            }
            Claim::RowMeanLowerSharp => {
                check_statistic(&id, evidence, Mean, |l| l.row(k) as f64, rows.sharp_lower, AtLeast, max_budget)
            }
            Claim::FirstRowUpper => check_statistic(
                &id,
                evidence,
                Mean,
                |l| l.row(1) as f64,
                first_row_upper(&alpha, n),
                AtMost,
                max_budget,
            ),
            Claim::LastRowLower => check_statistic(
                &id,
                evidence,
                Mean,
                |l| l.row(d) as f64,
                last_row_lower(&alpha, n),
                AtLeast,
                max_budget,
            ),
            Claim::Variance => {
                check_statistic(&id, evidence, Variance, |l| l.row(k) as f64, variance_bound(n), AtMost, max_budget)
            }
            Claim::MeanSquared => check_statistic(
                &id,
                evidence,
                Mean,
                |l| (l.row(k) as f64 - ak * nf).powi(2),
                mean_squared_bound(&alpha, k, n),
                AtMost,
                max_budget,
            ),
            Claim::Distance(metric) => {
                let probs = alpha.probs().to_vec();
                check_statistic(
                    &id,
                    evidence,
                    Mean,
                    |l| metric.value(&normalized(l), &probs, k),
                    metric.bound(d, k, n),
                    AtMost,
                    max_budget,
                )
            }
            Claim::EntropyUpper | Claim::EntropyLower => {
                let (lo, hi) = entropy_window(&alpha, n);
                let (bound, dir) = if self == Claim::EntropyUpper { (hi, AtMost) } else { (lo, AtLeast) };
                check_statistic(
                    &id,
                    evidence,
                    Mean,
                    |l| metrics::shannon_entropy(&normalized(l)),
                    bound,
                    dir,
                    max_budget,
                )
            }
            Claim::PlancherelLis => unreachable!(),
        };
        Ok(out)
    }
}

fn run_claim(claim: Claim, alpha: &SortedDist, k: usize, n: usize, settings: &CheckSettings) -> Result<BoundCheck> {
    let mut evidence = Evidence::build(Source::SchurWeyl(alpha.clone()), n, settings)?;
    claim.check(&mut evidence, k, settings.max_budget)
}

fn settings_for(budget: usize, seed: u64) -> CheckSettings {
    CheckSettings::new(budget.max(1), seed)
}

/// The excess `E[λ_1 + ... + λ_k] − (α_1 + ... + α_k) n` against [`itw`].
pub fn excess_estimate(alpha: &SortedDist, k: usize, n: usize, budget: usize, seed: u64) -> Result<BoundCheck> {
    run_claim(Claim::Excess, alpha, k, n, &settings_for(budget, seed))
}

/// `Var λ_k` against `16n`.
pub fn variance_check(alpha: &SortedDist, k: usize, n: usize, budget: usize, seed: u64) -> Result<BoundCheck> {
    run_claim(Claim::Variance, alpha, k, n, &settings_for(budget, seed))
}

/// `E (λ_k − α_k n)²` against [`mean_squared_bound`].
pub fn mean_squared_check(alpha: &SortedDist, k: usize, n: usize, budget: usize, seed: u64) -> Result<BoundCheck> {
    run_claim(Claim::MeanSquared, alpha, k, n, &settings_for(budget, seed))
}

/// A distance between `λ/n` and `α` against its rate. `k` is ignored by
/// the untruncated metrics.
pub fn distance_rate_check(
    metric: DistanceMetric,
    alpha: &SortedDist,
    n: usize,
    k: usize,
    budget: usize,
    seed: u64,
) -> Result<BoundCheck> {
    let k = if metric.is_truncated() { k } else { alpha.d() };
    run_claim(Claim::Distance(metric), alpha, k, n, &settings_for(budget, seed))
}

/// `E H(λ/n)` against both ends of [`entropy_window`]: `(lower, upper)`.
pub fn entropy_bias_check(alpha: &SortedDist, n: usize, budget: usize, seed: u64) -> Result<(BoundCheck, BoundCheck)> {
    let settings = settings_for(budget, seed);
    let mut evidence = Evidence::build(Source::SchurWeyl(alpha.clone()), n, &settings)?;
    let lower = Claim::EntropyLower.check(&mut evidence, 1, settings.max_budget)?;
    let upper = Claim::EntropyUpper.check(&mut evidence, 1, settings.max_budget)?;
    Ok((lower, upper))
}

/// For `β ⊵ α`: `E_α[λ_1 + ... + λ_k] ≤ E_β[μ_1 + ... + μ_k]`.
///
/// The estimate is the difference `E_α − E_β`, checked against 0 with a
/// pooled radius from two independent batches.
pub fn coupling_consequence_check(
    alpha: &SortedDist,
    beta: &SortedDist,
    k: usize,
    n: usize,
    budget: usize,
    seed: u64,
) -> Result<BoundCheck> {
    coupling_check_with(alpha, beta, k, n, &settings_for(budget, seed))
}

/// [`coupling_consequence_check`] with explicit settings; `beta` is sampled
/// from stream `settings.stream + 1`.
pub fn coupling_check_with(
    alpha: &SortedDist,
    beta: &SortedDist,
    k: usize,
    n: usize,
    settings: &CheckSettings,
) -> Result<BoundCheck> {
    if alpha.d() != beta.d() || !crate::partitions::dominates(beta.probs(), alpha.probs())? {
        return Err(Error::Precondition("beta must majorize alpha".into()));
    }
    let settings = *settings;
    let mut ev_a = Evidence::build(Source::SchurWeyl(alpha.clone()), n, &settings)?;
    let mut ev_b = Evidence::build(Source::SchurWeyl(beta.clone()), n, &settings.with_stream(settings.stream + 1))?;
    let stat = |ev: &Evidence| -> (f64, f64) {
        match ev {
            Evidence::Exact { law, .. } => (law.iter().map(|(l, p)| p * l.prefix(k) as f64).sum(), 0.0),
            Evidence::Sampled(b) => {
                let v: Vec<f64> = b.shapes().iter().map(|l| l.prefix(k) as f64).collect();
                mean_with_radius(&v)
            }
        }
    };
    loop {
        let (ma, ra) = stat(&ev_a);
        let (mb, rb) = stat(&ev_b);
        let estimate = ma - mb;
        let radius = (ra * ra + rb * rb).sqrt();
        let verdict = decide(estimate, radius, 0.0, Direction::AtMost);
        if verdict == Verdict::Inconclusive {
            let grew_a = ev_a.grow(settings.max_budget);
            let grew_b = ev_b.grow(settings.max_budget);
            if grew_a || grew_b {
                continue;
            }
        }
        let mode =
            if ev_a.mode() == Mode::Exact && ev_b.mode() == Mode::Exact { Mode::Exact } else { Mode::MonteCarlo };
        return Ok(BoundCheck {
            claim: "coupling".into(),
            estimate,
            radius,
            bound: 0.0,
            direction: Direction::AtMost,
            samples: ev_a.samples() + ev_b.samples(),
            mode,
            verdict,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::exact_sw_expectation;

    fn dist(p: &[f64]) -> SortedDist {
        SortedDist::new(p.to_vec()).unwrap()
    }

    #[test]
    fn itw_examples() {
        assert!((itw(&dist(&[0.75, 0.25]), 1) - 0.5).abs() < 1e-15);
        assert_eq!(itw(&dist(&[0.5, 0.3, 0.2]), 3), 0.0);
        let third = dist(&[0.5, 1.0 / 3.0, 1.0 / 6.0]);
        assert!((itw(&third, 1) - 2.5).abs() < 1e-12);
        assert_eq!(itw(&dist(&[0.5, 0.25, 0.25]), 2), f64::INFINITY);
        assert_eq!(itw(&dist(&[0.5, 0.5, 0.0]), 2), 0.0);
    }

    #[test]
    fn trivial_bound_examples() {
        assert!((itw_trivial_bound(&dist(&[0.75, 0.25]), 1).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(itw_trivial_bound(&dist(&[0.75, 0.25]), 2).unwrap(), 0.0);
        let third = dist(&[0.5, 1.0 / 3.0, 1.0 / 6.0]);
        assert!((itw_trivial_bound(&third, 1).unwrap() - 3.0).abs() < 1e-12);
        assert!(itw_trivial_bound(&dist(&[0.5, 0.5]), 1).is_err());
    }

    #[test]
    fn row_mean_examples() {
        let u = dist(&[0.5, 0.5]);
        let b = row_mean_bounds(&u, 1, 2);
        let s = 2.0 * 2f64.sqrt();
        assert!((b.lower - (1.0 - s)).abs() < 1e-12 && (b.upper - (1.0 + s)).abs() < 1e-12);
        let exact = exact_sw_expectation(|l| l.row(1) as f64, &u, 2).unwrap();
        assert!(b.lower <= exact && exact <= b.upper);
        let z = dist(&[1.0, 0.0]);
        assert!(row_mean_bounds(&z, 2, 10).lower <= 0.0);
        let one = dist(&[1.0]);
        let b = row_mean_bounds(&one, 1, 9);
        assert_eq!((b.lower, b.upper), (3.0, 15.0));
    }

    #[test]
    fn exact_excess_checks() {
        let a = dist(&[0.75, 0.25]);
        let c = excess_estimate(&a, 1, 1, 100, 0).unwrap();
        assert_eq!(c.mode, Mode::Exact);
        assert!((c.estimate - 0.25).abs() < 1e-15);
        assert_eq!(c.verdict, Verdict::Pass);
        let c = excess_estimate(&a, 1, 2, 100, 0).unwrap();
        assert!((c.estimate - 0.3125).abs() < 1e-15);
        let c = excess_estimate(&a, 2, 5, 100, 0).unwrap();
        assert!(c.estimate.abs() < 1e-12 && c.bound == 0.0 && c.verdict == Verdict::Pass);
    }

    #[test]
    fn exact_two_point_law_checks() {
        let u = dist(&[0.5, 0.5]);
        let v = variance_check(&u, 1, 2, 10, 0).unwrap();
        assert!((v.estimate - 3.0 / 16.0).abs() < 1e-15);
        assert_eq!(v.bound, 32.0);
        let m = mean_squared_check(&u, 1, 2, 10, 0).unwrap();
        assert!((m.estimate - 0.75).abs() < 1e-15);
        assert_eq!(m.bound, 42.0 * 0.5 * 2.0 + 42.0 * 2.0);
        let c = distance_rate_check(DistanceMetric::ChiSq, &u, 2, 2, 10, 0).unwrap();
        assert!((c.estimate - 0.75).abs() < 1e-15);
        assert_eq!(c.bound, 2.0);
        let (lo, hi) = entropy_bias_check(&u, 2, 10, 0).unwrap();
        assert!((hi.estimate - 0.25 * 2f64.ln()).abs() < 1e-15);
        assert!((lo.bound - (2f64.ln() - 3.0)).abs() < 1e-15);
        assert_eq!((lo.verdict, hi.verdict), (Verdict::Pass, Verdict::Pass));
    }

    #[test]
    fn single_letter_alphabet() {
        let one = dist(&[1.0]);
        for metric in DistanceMetric::ALL {
            let c = distance_rate_check(metric, &one, 50, 1, 10, 0).unwrap();
            assert_eq!(c.estimate, 0.0);
        }
        assert_eq!(variance_check(&one, 1, 500, 10, 0).unwrap().estimate, 0.0);
        let (lo, hi) = entropy_bias_check(&one, 40, 10, 0).unwrap();
        assert_eq!((lo.estimate, hi.estimate), (0.0, 0.0));
    }

    #[test]
    fn decision_rule() {
        assert_eq!(decide(1.0, 0.1, 2.0, Direction::AtMost), Verdict::Pass);
        assert_eq!(decide(1.95, 0.1, 2.0, Direction::AtMost), Verdict::Inconclusive);
        assert_eq!(decide(2.2, 0.1, 2.0, Direction::AtMost), Verdict::Fail);
        assert_eq!(decide(2.2, 0.1, 2.0, Direction::AtLeast), Verdict::Pass);
        assert_eq!(decide(1.0, 0.0, f64::INFINITY, Direction::AtMost), Verdict::Pass);
        assert_eq!(decide(0.0, 0.0, 0.0, Direction::AtMost), Verdict::Pass);
    }

    #[test]
    fn coupling_examples() {
        let a = dist(&[0.5, 0.5]);
        let b = dist(&[1.0, 0.0]);
        let c = coupling_consequence_check(&a, &b, 1, 30, 2000, 3).unwrap();
        assert_eq!(c.verdict, Verdict::Pass);
        let same = coupling_consequence_check(&a, &a, 1, 4, 10, 0).unwrap();
        assert_eq!(same.estimate, 0.0);
        assert!(coupling_consequence_check(&b, &a, 1, 4, 10, 0).is_err());
    }

    #[test]
    fn batches_are_reproducible_across_growth() {
        let a = dist(&[0.5, 0.3, 0.2]);
        let mut grown = ShapeBatch::new(Source::SchurWeyl(a.clone()), 40, 9, 2).unwrap();
        grown.extend_to(100);
        grown.extend_to(700);
        let mut direct = ShapeBatch::new(Source::SchurWeyl(a), 40, 9, 2).unwrap();
        direct.extend_to(700);
        assert_eq!(grown.shapes(), direct.shapes());
    }

    #[test]
    fn rearrangement_examples() {
        let a = [0.5, 0.25, 0.25];
        assert_eq!(rearrangement_rhs(&a, &a).unwrap(), 0.0);
        let b = [0.25, 0.5, 0.25];
        let rhs = rearrangement_rhs(&a, &b).unwrap();
        assert!((rhs - 0.25).abs() < 1e-15);
        let lhs = metrics::hellinger_sq(&a, &b, 3).unwrap();
        assert!((lhs - 0.0857864376269049).abs() < 1e-12);
        assert!(check_rearrangement(&a, &b).unwrap());
        assert!(rearrangement_rhs(&a, &[0.5, 0.5, 0.0]).is_err());
    }

    #[test]
    fn log_sum_examples() {
        assert!((log_sum(&[0.5, 0.25, 0.25]) - 0.5).abs() < 1e-15);
        assert!(log_sum_bound(&[0.5, 0.25, 0.25]).unwrap());
        assert!(log_sum_bound(&[0.25; 4]).unwrap());
        assert_eq!(log_sum(&[0.25; 4]), 0.0);
        assert!(log_sum_bound(&[0.5, 0.5, 0.0]).is_err());
    }

    #[test]
    fn thresholded_examples() {
        let a = [0.9, 0.1];
        assert!(thresholded_rearrangement_check(&a, &a, 0.5).unwrap());
        assert!(thresholded_rearrangement_check(&a, &[0.1, 0.9], 0.5).unwrap());
        assert!(thresholded_rearrangement_check(&a, &a, 0.95).is_err());
    }

    #[test]
    fn perturbation_helpers() {
        let a = dist(&[0.4, 0.3, 0.2, 0.1]);
        let b = lift_first_row(&a, 0.25).unwrap();
        assert!((b.get(1) - 0.65).abs() < 1e-12);
        assert!(b.get(2) <= a.get(2));
        assert!(crate::partitions::dominates(b.probs(), a.probs()).unwrap());
        let c = drain_last_row(&a, 0.05).unwrap();
        assert!((c.get(4) - 0.05).abs() < 1e-12 && c.get(3) >= a.get(3));
        assert!(crate::partitions::dominates(c.probs(), a.probs()).unwrap());
        assert!(drain_last_row(&a, 0.2).is_err());
    }

    #[test]
    fn claim_ids_round_trip() {
        for c in Claim::all() {
            assert_eq!(Claim::from_id(&c.id()).unwrap(), c);
        }
        assert!(Claim::from_id("nope").is_err());
    }
}
