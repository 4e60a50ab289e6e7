//! Young diagrams, sorted probability vectors, and majorization.
//!
//! A [`YoungDiagram`] is a nonincreasing list of row lengths. Trailing zero
//! rows may be stored explicitly (many statements are indexed by the
//! alphabet size `d`), but they never affect equality or hashing.
//!
//! Majorization ([`dominates`]) compares prefix sums and requires equal
//! totals; the weak variant ([`weakly_dominates`]) drops the total
//! constraint. Integer entries are compared exactly, real entries with an
//! absolute tolerance of [`REAL_TOLERANCE`] per prefix.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance used when comparing prefix sums of real vectors.
pub const REAL_TOLERANCE: f64 = 1e-12;

/// Scalar types that can be majorization-compared.
pub trait Entry: Copy + PartialOrd + fmt::Debug {
    fn zero() -> Self;
    fn add(self, other: Self) -> Self;
    /// `self >= other`, up to the type's comparison tolerance.
    fn at_least(self, other: Self) -> bool;
    fn same(self, other: Self) -> bool {
        self.at_least(other) && other.at_least(self)
    }
}

impl Entry for usize {
    fn zero() -> Self {
        0
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn at_least(self, other: Self) -> bool {
        self >= other
    }
}

impl Entry for u32 {
    fn zero() -> Self {
        0
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn at_least(self, other: Self) -> bool {
        self >= other
    }
}

impl Entry for f64 {
    fn zero() -> Self {
        0.0
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn at_least(self, other: Self) -> bool {
        self >= other - REAL_TOLERANCE
    }
}

fn check_sorted<T: Entry>(x: &[T]) -> Result<()> {
    match x.windows(2).position(|w| w[0] < w[1]) {
        Some(i) => Err(Error::Unsorted(format!("entry {} ({:?}) < entry {} ({:?})", i, x[i], i + 1, x[i + 1]))),
        None => Ok(()),
    }
}

fn prefix_dominance<T: Entry>(a: &[T], b: &[T]) -> Result<(bool, T, T)> {
    check_sorted(a)?;
    check_sorted(b)?;
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (T::zero(), T::zero());
    let mut ok = true;
    for i in 0..len {
        sa = sa.add(a.get(i).copied().unwrap_or_else(T::zero));
        sb = sb.add(b.get(i).copied().unwrap_or_else(T::zero));
        if !sa.at_least(sb) {
            ok = false;
        }
    }
    Ok((ok, sa, sb))
}

/// `a ⊵ b`: every prefix sum of `a` is at least that of `b`, and the totals
/// agree. Shorter inputs are padded with zeros.
pub fn dominates<T: Entry>(a: &[T], b: &[T]) -> Result<bool> {
    let (ok, sa, sb) = prefix_dominance(a, b)?;
    Ok(ok && sa.same(sb))
}

/// Weak majorization: prefix-sum dominance without the equal-total requirement.
pub fn weakly_dominates<T: Entry>(a: &[T], b: &[T]) -> Result<bool> {
    prefix_dominance(a, b).map(|(ok, _, _)| ok)
}

/// `x_1 + ... + x_k`.
pub fn prefix_sum<T: Entry>(x: &[T], k: usize) -> Result<T> {
    if k > x.len() {
        return Err(Error::IndexOutOfRange { index: k, len: x.len() });
    }
    Ok(x[..k].iter().fold(T::zero(), |s, &v| s.add(v)))
}

/// `x_{k+1} + ... + x_d`.
pub fn tail_sum<T: Entry>(x: &[T], k: usize) -> Result<T> {
    if k > x.len() {
        return Err(Error::IndexOutOfRange { index: k, len: x.len() });
    }
    Ok(x[k..].iter().fold(T::zero(), |s, &v| s.add(v)))
}

/// A partition: nonincreasing row lengths, trailing zeros allowed.
#[derive(Clone, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        check_sorted(&rows)?;
        Ok(Self { rows })
    }

    /// The empty diagram.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Callers must guarantee the rows are nonincreasing.
    pub(crate) fn from_sorted_unchecked(rows: Vec<usize>) -> Self {
        debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
        Self { rows }
    }

    /// Stored rows, including any explicit trailing zeros.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of nonzero rows.
    pub fn height(&self) -> usize {
        self.rows.iter().take_while(|&&r| r > 0).count()
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Row `k` (1-indexed); zero past the last stored row. `row(0)` is
    /// also zero.
    pub fn row(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        self.rows.get(k - 1).copied().unwrap_or(0)
    }

    /// `λ_1 + ... + λ_k`, treating missing rows as zero.
    pub fn prefix(&self, k: usize) -> usize {
        self.rows.iter().take(k).sum()
    }

    /// `λ_{k+1} + ...`.
    pub fn tail(&self, k: usize) -> usize {
        self.rows.iter().skip(k).sum()
    }

    /// Copy padded (or trimmed of zeros) to exactly `d` rows. Fails if the
    /// diagram has more than `d` nonzero rows.
    pub fn padded(&self, d: usize) -> Result<Self> {
        let h = self.height();
        if h > d {
            return Err(Error::IndexOutOfRange { index: h, len: d });
        }
        let mut rows = self.rows[..h].to_vec();
        rows.resize(d, 0);
        Ok(Self { rows })
    }

    /// Rows `k+1, k+2, ...` (the diagram with its first `k` rows removed).
    pub fn drop_rows(&self, k: usize) -> Self {
        Self { rows: self.rows.iter().skip(k).copied().collect() }
    }

    pub fn dominates(&self, other: &Self) -> bool {
        dominates(&self.rows, &other.rows).expect("diagrams are sorted")
    }

    pub fn weakly_dominates(&self, other: &Self) -> bool {
        weakly_dominates(&self.rows, &other.rows).expect("diagrams are sorted")
    }

    /// `λ / n`, with as many entries as stored rows.
    pub fn normalize(&self, n: usize) -> Result<Vec<f64>> {
        normalize(self, n)
    }

    fn trimmed(&self) -> &[usize] {
        &self.rows[..self.height()]
    }
}

impl PartialEq for YoungDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for YoungDiagram {}

impl Hash for YoungDiagram {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl PartialOrd for YoungDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the trimmed rows; used only to give diagrams a
/// stable sort order in reports.
impl Ord for YoungDiagram {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.trimmed().cmp(other.trimmed())
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<usize>> for YoungDiagram {
    type Error = Error;
    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<YoungDiagram> for Vec<usize> {
    fn from(d: YoungDiagram) -> Self {
        d.rows
    }
}

/// `λ / n`. Fails unless `λ` has exactly `n > 0` boxes.
pub fn normalize(lambda: &YoungDiagram, n: usize) -> Result<Vec<f64>> {
    let size = lambda.size();
    if n == 0 || size != n {
        return Err(Error::SizeMismatch { expected: n, actual: size });
    }
    let n = n as f64;
    Ok(lambda.rows.iter().map(|&r| r as f64 / n).collect())
}

/// Tolerance on the total of a [`SortedDist`].
pub const DIST_SUM_TOLERANCE: f64 = 1e-12;

/// A probability vector sorted in nonincreasing order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SortedDist {
    probs: Vec<f64>,
}

impl SortedDist {
    /// Validates finiteness, range, sortedness and total.
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidDistribution("empty".into()));
        }
        if let Some(p) = probs.iter().find(|p| !p.is_finite() || **p < 0.0 || **p > 1.0) {
            return Err(Error::InvalidDistribution(format!("entry {p} outside [0,1]")));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > DIST_SUM_TOLERANCE {
            return Err(Error::InvalidDistribution(format!("entries sum to {total}")));
        }
        check_sorted(&probs)?;
        Ok(Self { probs })
    }

    /// Sorts the input into nonincreasing order, then validates.
    pub fn from_unsorted(mut probs: Vec<f64>) -> Result<Self> {
        probs.sort_by(|a, b| b.total_cmp(a));
        Self::new(probs)
    }

    /// Normalizes positive weights and sorts them.
    pub fn from_weights(weights: &[f64]) -> Result<Self> {
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidDistribution("weights must be finite and nonnegative".into()));
        }
        let total: f64 = weights.iter().sum();
        if total <= 0.0 {
            return Err(Error::InvalidDistribution("weights sum to zero".into()));
        }
        let mut probs: Vec<f64> = weights.iter().map(|w| w / total).collect();
        probs.sort_by(|a, b| b.total_cmp(a));
        // Absorb the rounding residue into the largest entry.
        let residue = 1.0 - probs.iter().sum::<f64>();
        probs[0] += residue;
        Self::new(probs)
    }

    pub fn uniform(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDistribution("d = 0".into()));
        }
        Self::from_weights(&vec![1.0; d])
    }

    /// `α_i ∝ i^{-s}`.
    pub fn zipf(d: usize, s: f64) -> Result<Self> {
        if d == 0 || !s.is_finite() {
            return Err(Error::InvalidDistribution("zipf needs d > 0 and finite s".into()));
        }
        let weights: Vec<f64> = (1..=d).map(|i| (i as f64).powf(-s)).collect();
        Self::from_weights(&weights)
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn d(&self) -> usize {
        self.probs.len()
    }

    /// `α_k` (1-indexed); zero outside `1..=d`.
    pub fn get(&self, k: usize) -> f64 {
        if k == 0 {
            return 0.0;
        }
        self.probs.get(k - 1).copied().unwrap_or(0.0)
    }

    /// `α_1 + ... + α_k`, saturating at `d`.
    pub fn prefix(&self, k: usize) -> f64 {
        self.probs.iter().take(k).sum()
    }

    /// `α_{k+1} + ... + α_d`.
    pub fn tail(&self, k: usize) -> f64 {
        self.probs.iter().skip(k).sum()
    }

    /// True when all entries are positive and strictly decreasing.
    pub fn is_strictly_decreasing(&self) -> bool {
        self.probs.windows(2).all(|w| w[0] > w[1]) && self.probs.iter().all(|&p| p > 0.0)
    }
}
