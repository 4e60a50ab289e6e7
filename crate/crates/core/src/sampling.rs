//! Random words, Schur–Weyl and Plancherel sampling, and exact enumeration.
//!
//! Randomness comes from ChaCha8 streams addressed by `(seed, stream)`; see
//! [`stream_rng`]. Letters are drawn with Walker's alias method.
//!
//! The exact routes enumerate every word (or every histogram) and refuse to
//! run past a cap instead of silently falling back to sampling.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, WeightedAliasIndex};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{SortedDist, YoungDiagram};
use crate::rsk::{sh_rsk_letters, Insertion, Word};

/// Default cap on `d^n` for word enumeration.
pub const WORD_CAP: u128 = 10_000_000;
/// Default cap on the number of histograms.
pub const HISTOGRAM_CAP: u128 = 1_000_000;

/// The generator for stream `stream` of `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Draws i.i.d. letters from a fixed distribution.
#[derive(Debug, Clone)]
pub struct WordSampler {
    alias: WeightedAliasIndex<f64>,
    d: u32,
}

impl WordSampler {
    pub fn new(alpha: &SortedDist) -> Result<Self> {
        Self::from_weights(alpha.probs())
    }

    /// Weights need not be sorted or normalized.
    pub fn from_weights(weights: &[f64]) -> Result<Self> {
        let alias = WeightedAliasIndex::new(weights.to_vec()).map_err(|e| Error::InvalidDistribution(e.to_string()))?;
        Ok(Self { alias, d: weights.len() as u32 })
    }

    pub fn sample<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Word {
        let letters = (0..n).map(|_| self.alias.sample(rng) as u32 + 1).collect();
        Word::from_parts_unchecked(letters, self.d)
    }

    /// `shRSK` of a fresh word, inserting letters as they are drawn.
    pub fn sample_shape<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> YoungDiagram {
        let mut ins = Insertion::new();
        for _ in 0..n {
            ins.push(self.alias.sample(rng) as u32 + 1);
        }
        ins.shape()
    }
}

/// An `n`-letter `α`-random word (stream 0 of `seed`).
pub fn sample_word(alpha: &SortedDist, n: usize, seed: u64) -> Result<Word> {
    Ok(WordSampler::new(alpha)?.sample(n, &mut stream_rng(seed, 0)))
}

/// A draw from the Schur–Weyl distribution `SW(n, α)`: the RSK shape of an
/// `α`-random word.
pub fn sample_sw(alpha: &SortedDist, n: usize, seed: u64) -> Result<YoungDiagram> {
    Ok(WordSampler::new(alpha)?.sample_shape(n, &mut stream_rng(seed, 0)))
}

/// A uniformly random permutation of `[n]`, as a word.
pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Word {
    let mut letters: Vec<u32> = (1..=n as u32).collect();
    letters.shuffle(rng);
    Word::from_parts_unchecked(letters, n as u32)
}

/// A Plancherel-distributed diagram with `n` boxes, drawn with `rng`.
pub fn plancherel_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> YoungDiagram {
    sh_rsk_letters(random_permutation(n, rng).letters())
}

/// A Plancherel-distributed diagram (stream 0 of `seed`).
pub fn sample_plancherel(n: usize, seed: u64) -> YoungDiagram {
    plancherel_with(n, &mut stream_rng(seed, 0))
}

/// Letter counts of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Histogram {
    counts: Vec<usize>,
}

impl Histogram {
    pub fn new(counts: Vec<usize>) -> Self {
        Self { counts }
    }

    pub fn of_word(w: &Word) -> Self {
        let mut counts = vec![0; w.alphabet() as usize];
        for &l in w.letters() {
            counts[l as usize - 1] += 1;
        }
        Self { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn n(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `h_i` (1-indexed).
    pub fn get(&self, i: usize) -> usize {
        self.counts[i - 1]
    }
}

/// A real weight that may be negative.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct SignedWeight(pub f64);

fn checked_count(d: usize, n: usize) -> u128 {
    let mut total: u128 = 1;
    for _ in 0..n {
        total = total.saturating_mul(d as u128);
    }
    total
}

/// Number of histograms of size `n` over `d` letters, `C(n+d-1, d-1)`.
pub fn histogram_count(d: usize, n: usize) -> u128 {
    if d == 0 {
        return u128::from(n == 0);
    }
    let k = (d - 1) as u128;
    let mut c: u128 = 1;
    for i in 1..=k {
        c = c.saturating_mul(n as u128 + i) / i;
    }
    c
}

/// Every word of length `n` over `[d]`, in lexicographic order.
pub fn enumerate_words(d: usize, n: usize, cap: u128) -> Result<WordIter> {
    let requested = checked_count(d, n);
    if requested > cap {
        return Err(Error::CapExceeded { requested, cap });
    }
    Ok(WordIter { d: d as u32, current: (d > 0 || n == 0).then(|| vec![1; n]) })
}

/// Odometer over `[d]^n`.
#[derive(Debug, Clone)]
pub struct WordIter {
    d: u32,
    current: Option<Vec<u32>>,
}

impl Iterator for WordIter {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.as_mut()?;
        let out = Word::from_parts_unchecked(cur.clone(), self.d);
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.d {
                cur[i] += 1;
                break;
            }
            cur[i] = 1;
        }
        Some(out)
    }
}

/// Every histogram of size `n` over `d` letters, each exactly once.
pub fn enumerate_histograms(d: usize, n: usize, cap: u128) -> Result<std::vec::IntoIter<Histogram>> {
    let requested = histogram_count(d, n);
    if requested > cap {
        return Err(Error::CapExceeded { requested, cap });
    }
    fn go(d: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Histogram>) {
        if cur.len() + 1 == d {
            cur.push(rem);
            out.push(Histogram::new(cur.clone()));
            cur.pop();
            return;
        }
        for c in (0..=rem).rev() {
            cur.push(c);
            go(d, rem - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::with_capacity(requested as usize);
    if d > 0 {
        go(d, n, &mut Vec::with_capacity(d), &mut out);
    }
    Ok(out.into_iter())
}

/// Probability of `h` under `Mult(n, α)`.
pub fn multinomial_pmf(h: &Histogram, alpha: &SortedDist) -> Result<f64> {
    if h.counts.len() != alpha.d() {
        return Err(Error::LengthMismatch { left: h.counts.len(), right: alpha.d() });
    }
    // Multinomial coefficient as a product of binomials, exact while it fits
    // in 53 bits.
    let mut coef = 1.0;
    let mut seen = 0usize;
    for &c in &h.counts {
        for j in 1..=c {
            coef = coef * (seen + j) as f64 / j as f64;
        }
        seen += c;
    }
    let power: f64 = h.counts.iter().zip(alpha.probs()).map(|(&c, &p)| p.powi(c as i32)).product();
    Ok(coef * power)
}

fn require_distinct(alpha: &SortedDist) -> Result<()> {
    if alpha.is_strictly_decreasing() {
        Ok(())
    } else {
        Err(Error::NotDistinct(format!("{:?}", alpha.probs())))
    }
}

/// The relative density of the modified `α`-multinomial distribution:
///
/// `f(h) = 1 + Σ_{i<j} α_j/(α_i − α_j) · (h_i/(α_i n) − h_j/(α_j n))`,
///
/// defined only for strictly decreasing positive `α`. For `n = 0` this is 1.
pub fn mod_density(h: &Histogram, alpha: &SortedDist) -> Result<SignedWeight> {
    require_distinct(alpha)?;
    if h.counts.len() != alpha.d() {
        return Err(Error::LengthMismatch { left: h.counts.len(), right: alpha.d() });
    }
    let n = h.n();
    if n == 0 {
        return Ok(SignedWeight(1.0));
    }
    let n = n as f64;
    let a = alpha.probs();
    let mut f = 1.0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let dev = h.counts[i] as f64 / (a[i] * n) - h.counts[j] as f64 / (a[j] * n);
            f += a[j] / (a[i] - a[j]) * dev;
        }
    }
    Ok(SignedWeight(f))
}

/// `E_{h ~ ModMult(n, α)}[F(h)]` by summing over every histogram.
pub fn modmult_expectation<F>(functional: F, alpha: &SortedDist, n: usize) -> Result<f64>
where
    F: Fn(&Histogram) -> f64,
{
    modmult_expectation_with_cap(functional, alpha, n, HISTOGRAM_CAP)
}

pub fn modmult_expectation_with_cap<F>(functional: F, alpha: &SortedDist, n: usize, cap: u128) -> Result<f64>
where
    F: Fn(&Histogram) -> f64,
{
    require_distinct(alpha)?;
    let mut total = 0.0;
    for h in enumerate_histograms(alpha.d(), n, cap)? {
        total += mod_density(&h, alpha)?.0 * multinomial_pmf(&h, alpha)? * functional(&h);
    }
    Ok(total)
}

/// The exact law of `shRSK(w)` for `w` with i.i.d. letters of the given
/// weights (which need not be sorted), as `(diagram, probability)` pairs in
/// diagram order. Letters of weight zero are skipped.
pub fn exact_sw_law_weights(probs: &[f64], n: usize, cap: u128) -> Result<Vec<(YoungDiagram, f64)>> {
    let requested = checked_count(probs.len(), n);
    if requested > cap {
        return Err(Error::CapExceeded { requested, cap });
    }
    let mut law: BTreeMap<YoungDiagram, f64> = BTreeMap::new();
    fn go(probs: &[f64], left: usize, weight: f64, ins: &Insertion, law: &mut BTreeMap<YoungDiagram, f64>) {
        if left == 0 {
            *law.entry(ins.shape()).or_insert(0.0) += weight;
            return;
        }
        for (i, &p) in probs.iter().enumerate() {
            if p == 0.0 {
                continue;
            }
            let mut next = ins.clone();
            next.push(i as u32 + 1);
            go(probs, left - 1, weight * p, &next, law);
        }
    }
    go(probs, n, 1.0, &Insertion::new(), &mut law);
    Ok(law.into_iter().collect())
}

/// The exact law of `SW(n, α)`.
pub fn exact_sw_law(alpha: &SortedDist, n: usize, cap: u128) -> Result<Vec<(YoungDiagram, f64)>> {
    exact_sw_law_weights(alpha.probs(), n, cap)
}

/// `E_{λ ~ SW(n, α)}[F(λ)]` by enumerating all `d^n` words.
pub fn exact_sw_expectation<F>(functional: F, alpha: &SortedDist, n: usize) -> Result<f64>
where
    F: Fn(&YoungDiagram) -> f64,
{
    let law = exact_sw_law(alpha, n, WORD_CAP)?;
    Ok(law.iter().map(|(lambda, p)| p * functional(lambda)).sum())
}

/// `Exc(n, k, α) = E[λ_1 + ... + λ_k] − (α_1 + ... + α_k) n`, exactly.
pub fn exact_excess(alpha: &SortedDist, k: usize, n: usize) -> Result<f64> {
    let mean = exact_sw_expectation(|l| l.prefix(k) as f64, alpha, n)?;
    Ok(mean - alpha.prefix(k) * n as f64)
}
