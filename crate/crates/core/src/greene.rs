//! Oracles for increasing subsequences, independent of the RSK code path.
//!
//! [`lis`] uses a max-prefix Fenwick tree over letter values rather than
//! row insertion. [`greene_invariant`] is an exhaustive search over
//! assignments of positions to `k` disjoint weakly increasing subsequences;
//! it is exponential and refuses inputs longer than [`ORACLE_LIMIT`].

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partitions::dominates;
use crate::rsk::{bump_stream, restrict_geq, sh_rsk, standardize, subsequence_in_original_order, Word};

/// Longest word [`greene_invariant`] accepts.
pub const ORACLE_LIMIT: usize = 14;

/// Length of the longest weakly increasing subsequence.
pub fn lis(w: &Word) -> usize {
    let size = w.alphabet() as usize;
    // tree[v] = longest subsequence ending in a letter <= v
    let mut tree = vec![0usize; size + 1];
    let mut best = 0;
    for &letter in w.letters() {
        let mut v = letter as usize;
        let mut prev = 0;
        while v > 0 {
            prev = prev.max(tree[v]);
            v &= v - 1;
        }
        let here = prev + 1;
        best = best.max(here);
        let mut v = letter as usize;
        while v <= size {
            tree[v] = tree[v].max(here);
            v += v & v.wrapping_neg();
        }
    }
    best
}

/// Largest total length of `k` disjoint weakly increasing subsequences.
///
/// Each position is either left out or appended to one of the `k`
/// subsequences whose current last letter is at most it. Subsequences are
/// interchangeable, so the search state is the sorted list of their last
/// letters; states are memoized and a branch stops early once it has used
/// every remaining position.
pub fn greene_invariant(w: &Word, k: usize) -> Result<usize> {
    greene_invariant_with_limit(w, k, ORACLE_LIMIT)
}

pub fn greene_invariant_with_limit(w: &Word, k: usize, limit: usize) -> Result<usize> {
    let n = w.len();
    if n > limit {
        return Err(Error::OracleTooLarge { n, limit });
    }
    if k >= n {
        return Ok(n);
    }
    let mut search = GreeneSearch { letters: w.letters(), k, memo: HashMap::new() };
    Ok(search.best(0, Vec::new()))
}

struct GreeneSearch<'a> {
    letters: &'a [u32],
    k: usize,
    memo: HashMap<(usize, Vec<u32>), usize>,
}

impl GreeneSearch<'_> {
    /// Best number of positions in `pos..` that can still be used, given
    /// the (sorted) last letters of the subsequences opened so far.
    fn best(&mut self, pos: usize, tails: Vec<u32>) -> usize {
        let remaining = self.letters.len() - pos;
        if remaining == 0 {
            return 0;
        }
        if let Some(&v) = self.memo.get(&(pos, tails.clone())) {
            return v;
        }
        let x = self.letters[pos];
        let mut best = 0;
        let mut options: Vec<Vec<u32>> = Vec::new();
        if tails.len() < self.k {
            let mut t = tails.clone();
            t.push(x);
            t.sort_unstable();
            options.push(t);
        }
        let mut last = None;
        for (i, &tail) in tails.iter().enumerate() {
            if tail > x {
                break;
            }
            if last == Some(tail) {
                continue;
            }
            last = Some(tail);
            let mut t = tails.clone();
            t[i] = x;
            t.sort_unstable();
            options.push(t);
        }
        for t in options {
            best = best.max(1 + self.best(pos + 1, t));
            if best == remaining {
                break;
            }
        }
        if best < remaining {
            best = best.max(self.best(pos + 1, tails.clone()));
        }
        self.memo.insert((pos, tails), best);
        best
    }
}

/// Greene's theorem for one word and one `k`: the oracle agrees with the
/// first `k` rows of `shRSK(w)`.
pub fn check_greene(w: &Word, k: usize) -> Result<bool> {
    Ok(greene_invariant(w, k)? == sh_rsk(w).prefix(k))
}

/// `shRSK(x̄) ⊵ shRSK(x^(k))`, where `x^(k)` is the row-`k` bump stream and
/// `x̄` the same letters in their original order. Computed on the
/// standardization of `x`.
pub fn check_lower_row_majorization(x: &Word, k: usize) -> bool {
    let std = standardize(x);
    let stream = bump_stream(&std, k);
    let original = subsequence_in_original_order(&std, k);
    let a = sh_rsk(&original);
    let b = sh_rsk(&stream);
    dominates(a.rows(), b.rows()).expect("diagrams are sorted")
}

/// `shRSK(w^{≥k})` weakly dominates rows `k, k+1, ...` of `shRSK(w)`.
pub fn check_restriction_weak_majorization(w: &Word, k: u32) -> bool {
    let restricted = sh_rsk(&restrict_geq(w, k));
    let lower = sh_rsk(w).drop_rows(k.saturating_sub(1) as usize);
    restricted.weakly_dominates(&lower)
}
