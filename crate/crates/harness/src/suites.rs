//! Deterministic verification suites.
//!
//! Word suites enumerate every word over `[max_d]` of each length
//! `0..=max_n` (words over smaller alphabets are among them). Permutation
//! suites enumerate every permutation of each size up to `max_n`. Random
//! suites draw `trials` instances from the given seed.

use std::fmt;

use anyhow::{bail, Result};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use schur_weyl::bounds::{check_rearrangement, itw, log_sum_bound, thresholded_rearrangement_check};
use schur_weyl::greene::{
    check_greene, check_lower_row_majorization, check_restriction_weak_majorization, lis, ORACLE_LIMIT,
};
use schur_weyl::metrics::{chi_sq, hellinger_sq, kl};
use schur_weyl::rsk::{bump_stream, sh_rsk, standardize, Word};
use schur_weyl::sampling::{enumerate_words, exact_excess, modmult_expectation, stream_rng, WORD_CAP};
use schur_weyl::viennot::{build_diagram, iterated_shape, skeleton_word};
use schur_weyl::SortedDist;

/// Longest permutation the permutation suites will enumerate.
pub const PERMUTATION_LIMIT: usize = 10;

/// Most counterexamples kept in a report.
const MAX_COUNTEREXAMPLES: usize = 20;

/// Tolerance of the modified-multinomial identities.
pub const IDENTITY_TOLERANCE: f64 = 1e-10;

/// Tolerance of the floating-point inequality suites.
pub const INEQUALITY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Schensted,
    Greene,
    Lipschitz,
    LowerRowMajorization,
    RestrictionMajorization,
    Viennot,
    ModmultIdentity,
    ExcessMonotone,
    DistanceInequalities,
    Rearrangement,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Schensted,
        Suite::Greene,
        Suite::Lipschitz,
        Suite::LowerRowMajorization,
        Suite::RestrictionMajorization,
        Suite::Viennot,
        Suite::ModmultIdentity,
        Suite::ExcessMonotone,
        Suite::DistanceInequalities,
        Suite::Rearrangement,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Schensted => "schensted",
            Suite::Greene => "greene",
            Suite::Lipschitz => "lipschitz",
            Suite::LowerRowMajorization => "lower-row-majorization",
            Suite::RestrictionMajorization => "restriction-majorization",
            Suite::Viennot => "viennot",
            Suite::ModmultIdentity => "modmult-identity",
            Suite::ExcessMonotone => "excess-monotone",
            Suite::DistanceInequalities => "distance-inequalities",
            Suite::Rearrangement => "rearrangement",
        }
    }

    pub fn from_id(id: &str) -> Result<Self> {
        match Self::ALL.into_iter().find(|s| s.id() == id) {
            Some(s) => Ok(s),
            None => bail!("unknown suite `{id}`; expected one of {}", Self::ALL.map(Suite::id).join(", ")),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuiteParams {
    pub max_n: usize,
    pub max_d: usize,
    /// Instances for the random suites.
    pub trials: usize,
    pub seed: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        Self { max_n: 8, max_d: 3, trials: 100_000, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub params: SuiteParams,
    /// Instances checked (words, permutations, or random draws).
    pub checked: u64,
    /// Failing instances, verbatim, up to a fixed number.
    pub counterexamples: Vec<String>,
    pub failures: u64,
    /// Largest absolute error, for the suites that compare numbers.
    pub max_error: Option<f64>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    checked: u64,
    failures: u64,
    counterexamples: Vec<String>,
    max_error: Option<f64>,
}

impl Tally {
    fn new() -> Self {
        Self { checked: 0, failures: 0, counterexamples: Vec::new(), max_error: None }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if !ok {
            self.failures += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(describe());
            }
        }
    }

    fn error(&mut self, e: f64) {
        self.max_error = Some(self.max_error.map_or(e, |m: f64| m.max(e)));
    }

    fn finish(self, suite: Suite, params: SuiteParams) -> SuiteReport {
        SuiteReport {
            suite,
            params,
            checked: self.checked,
            counterexamples: self.counterexamples,
            failures: self.failures,
            max_error: self.max_error,
        }
    }
}

fn for_each_word(params: &SuiteParams, mut f: impl FnMut(&Word)) -> Result<()> {
    for n in 0..=params.max_n {
        for w in enumerate_words(params.max_d, n, WORD_CAP)? {
            f(&w);
        }
    }
    Ok(())
}

/// Heap's algorithm over `1..=n`.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[u32])) {
    let mut a: Vec<u32> = (1..=n as u32).collect();
    let mut c = vec![0usize; n];
    f(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn for_each_permutation_up_to(max_n: usize, mut f: impl FnMut(&Word)) -> Result<()> {
    if max_n > PERMUTATION_LIMIT {
        bail!("permutations of size {max_n} exceed the limit of {PERMUTATION_LIMIT}");
    }
    for n in 0..=max_n {
        for_each_permutation(n, |p| f(&Word::from_letters(p.to_vec())));
    }
    Ok(())
}

/// Strictly decreasing distributions with `d ≤ max_d`: two Zipf laws, a
/// linear law and a geometric law for each `d`.
pub fn distinct_alpha_grid(max_d: usize) -> Result<Vec<SortedDist>> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        out.push(SortedDist::zipf(d, 1.0)?);
        if d > 1 {
            out.push(SortedDist::zipf(d, 2.0)?);
            let linear: Vec<f64> = (1..=d).rev().map(|i| i as f64).collect();
            out.push(SortedDist::from_weights(&linear)?);
            let geometric: Vec<f64> = (0..d).map(|i| 0.5f64.powi(i as i32)).collect();
            out.push(SortedDist::from_weights(&geometric)?);
        }
    }
    Ok(out)
}

/// A probability vector with entries bounded below by `floor` before
/// normalization.
fn random_probs<R: Rng>(rng: &mut R, d: usize, floor: f64) -> Vec<f64> {
    let w: Vec<f64> = (0..d).map(|_| rng.gen_range(floor..1.0)).collect();
    let s: f64 = w.iter().sum();
    w.into_iter().map(|x| x / s).collect()
}

fn sorted_desc(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

pub fn run_suite(suite: Suite, params: SuiteParams) -> Result<SuiteReport> {
    if params.max_d == 0 {
        bail!("--max-d must be at least 1");
    }
    let mut t = Tally::new();
    match suite {
        Suite::Schensted => for_each_word(&params, |w| {
            t.checked += 1;
            t.record(sh_rsk(w).row(1) == lis(w), || w.to_string());
        })?,
        Suite::Greene => {
            if params.max_n > ORACLE_LIMIT {
                bail!("--max-n {} exceeds the oracle limit of {ORACLE_LIMIT}", params.max_n);
            }
            for_each_word(&params, |w| {
                t.checked += 1;
                let ok = (1..=w.len()).all(|k| check_greene(w, k).expect("within limit"));
                t.record(ok, || w.to_string());
            })?
        }
        Suite::Lipschitz => for_each_word(&params, |w| {
            t.checked += 1;
            let before = sh_rsk(w);
            for pos in 0..w.len() {
                for letter in 1..=w.alphabet() {
                    let v = w.with_letter(pos, letter).expect("in range");
                    let after = sh_rsk(&v);
                    let ok = (1..=w.len()).all(|k| {
                        before.prefix(k).abs_diff(after.prefix(k)) <= 1 && before.row(k).abs_diff(after.row(k)) <= 2
                    });
                    t.record(ok, || format!("{w} -> {v}"));
                }
            }
        })?,
        Suite::LowerRowMajorization => {
            for_each_permutation_up_to(params.max_n, |w| {
                t.checked += 1;
                for k in 1..=3 {
                    t.record(check_lower_row_majorization(w, k), || format!("{w} k={k}"));
                }
            })?;
            for_each_word(&params, |w| {
                t.checked += 1;
                for k in 1..=3 {
                    t.record(check_lower_row_majorization(w, k), || format!("{w} k={k}"));
                }
            })?
        }
        Suite::RestrictionMajorization => for_each_word(&params, |w| {
            t.checked += 1;
            for k in 1..=w.alphabet() {
                t.record(check_restriction_weak_majorization(w, k), || format!("{w} k={k}"));
            }
        })?,
        Suite::Viennot => for_each_permutation_up_to(params.max_n, |w| {
            t.checked += 1;
            let d = build_diagram(w).expect("permutation");
            let ok = d.lines.len() == lis(w)
                && skeleton_word(&d).letters() == bump_stream(w, 1).letters()
                && iterated_shape(w).expect("permutation") == sh_rsk(w)
                && d.is_non_crossing();
            t.record(ok, || w.to_string());
        })?,
        Suite::ModmultIdentity => {
            for alpha in distinct_alpha_grid(params.max_d)? {
                let a = alpha.probs().to_vec();
                for n in 0..=params.max_n {
                    t.checked += 1;
                    let total = modmult_expectation(|_| 1.0, &alpha, n)?;
                    let mut worst = (total - 1.0).abs();
                    let mut prefix = 0.0;
                    for k in 1..=alpha.d() {
                        let ak = a[k - 1];
                        let got = modmult_expectation(|h| h.get(k) as f64 - ak * n as f64, &alpha, n)?;
                        if n > 0 {
                            let below: f64 = a[k..].iter().map(|&aj| aj / (ak - aj)).sum();
                            let above: f64 = a[..k - 1].iter().map(|&ai| ak / (ai - ak)).sum();
                            worst = worst.max((got - (below - above)).abs());
                            prefix += got;
                            worst = worst.max((prefix - itw(&alpha, k)).abs());
                        } else {
                            worst = worst.max(got.abs());
                        }
                    }
                    t.error(worst);
                    t.record(worst < IDENTITY_TOLERANCE, || format!("α={:?} n={n} error={worst:e}", alpha.probs()));
                }
            }
        }
        Suite::ExcessMonotone => {
            for alpha in distinct_alpha_grid(params.max_d)? {
                for k in 1..=alpha.d() {
                    let bound = itw(&alpha, k);
                    let mut prev = 0.0;
                    for n in 0..=params.max_n {
                        t.checked += 1;
                        let exc = exact_excess(&alpha, k, n)?;
                        let ok = exc >= -INEQUALITY_TOLERANCE
                            && exc >= prev - INEQUALITY_TOLERANCE
                            && exc <= bound + INEQUALITY_TOLERANCE;
                        t.record(ok, || {
                            format!("α={:?} k={k} n={n} excess={exc} previous={prev} bound={bound}", alpha.probs())
                        });
                        prev = exc;
                    }
                }
            }
        }
        Suite::DistanceInequalities => {
            let mut rng = stream_rng(params.seed, 0);
            for _ in 0..params.trials {
                t.checked += 1;
                let d = rng.gen_range(1..=params.max_d);
                let a = random_probs(&mut rng, d, 0.0);
                let b = random_probs(&mut rng, d, 1e-6);
                let c = random_probs(&mut rng, d, 0.0);
                let chi = chi_sq(&a, &b, d)?;
                let identity: f64 = a.iter().zip(&b).map(|(x, y)| x * x / y).sum::<f64>() - 1.0;
                let mut ok = kl(&a, &b)? <= chi + INEQUALITY_TOLERANCE
                    && (chi - identity).abs() <= INEQUALITY_TOLERANCE * (1.0 + chi);
                for k in 1..=d {
                    ok &= hellinger_sq(&a, &b, k)? <= chi_sq(&a, &b, k)? + INEQUALITY_TOLERANCE;
                }
                let h = |x: &[f64], y: &[f64]| hellinger_sq(x, y, d).map(f64::sqrt);
                ok &= h(&a, &c)? <= h(&a, &b)? + h(&b, &c)? + INEQUALITY_TOLERANCE;
                t.record(ok, || format!("a={a:?} b={b:?} c={c:?}"));
            }
        }
        Suite::Rearrangement => {
            let mut rng = stream_rng(params.seed, 1);
            for _ in 0..params.trials {
                t.checked += 1;
                let d = rng.gen_range(1..=params.max_d);
                let alpha = sorted_desc(random_probs(&mut rng, d, 1e-4));
                let mut beta = alpha.clone();
                beta.shuffle(&mut rng);
                let mut ok = check_rearrangement(&alpha, &beta)? && log_sum_bound(&alpha)?;
                if d >= 2 {
                    let k = rng.gen_range(1..d);
                    if alpha[k - 1] > alpha[k] {
                        let zeta = alpha[k] + rng.gen::<f64>() * (alpha[k - 1] - alpha[k]) * 0.999;
                        ok &= thresholded_rearrangement_check(&alpha, &beta, zeta)?;
                    }
                }
                t.record(ok, || format!("α={alpha:?} β={beta:?}"));
            }
        }
    }
    Ok(t.finish(suite, params))
}

/// Standardized random words: used by the acceptance run for the lower-row
/// check beyond exhaustive sizes.
pub fn random_standardized_word<R: Rng>(rng: &mut R, max_n: usize, max_d: u32) -> Word {
    let n = rng.gen_range(0..=max_n);
    let d = rng.gen_range(1..=max_d);
    let letters: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=d)).collect();
    standardize(&Word::new(letters, d).expect("letters in range"))
}
