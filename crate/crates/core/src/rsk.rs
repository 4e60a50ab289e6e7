//! The RSK correspondence.
//!
//! # Insertion convention
//!
//! Rows are kept *weakly* increasing. Inserting letter `x` into a row
//! replaces the leftmost entry **strictly greater** than `x`; if there is
//! none, `x` is appended. Equal letters therefore sit side by side in a row,
//! which is what makes the first row count weakly increasing subsequences.
//! Every function in this crate uses this convention.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::YoungDiagram;

/// A word over the ordered alphabet `[1..=d]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<u32>,
    alphabet: u32,
}

impl Word {
    pub fn new(letters: Vec<u32>, alphabet: u32) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l > alphabet) {
            return Err(Error::LetterOutOfRange { letter: bad, alphabet });
        }
        Ok(Self { letters, alphabet })
    }

    /// A word whose alphabet is its largest letter. Panics on a zero letter.
    pub fn from_letters(letters: impl Into<Vec<u32>>) -> Self {
        let letters = letters.into();
        assert!(letters.iter().all(|&l| l > 0), "letters are 1-indexed");
        let alphabet = letters.iter().copied().max().unwrap_or(0);
        Self { letters, alphabet }
    }

    pub(crate) fn from_parts_unchecked(letters: Vec<u32>, alphabet: u32) -> Self {
        debug_assert!(letters.iter().all(|&l| l >= 1 && l <= alphabet));
        Self { letters, alphabet }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True when no letter repeats.
    pub fn has_distinct_letters(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.letters.len());
        self.letters.iter().all(|l| seen.insert(*l))
    }

    /// Same word with the letter at `pos` replaced.
    pub fn with_letter(&self, pos: usize, letter: u32) -> Result<Self> {
        if pos >= self.len() {
            return Err(Error::IndexOutOfRange { index: pos, len: self.len() });
        }
        let mut letters = self.letters.clone();
        letters[pos] = letter;
        Self::new(letters, self.alphabet)
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sep = if self.alphabet > 9 { " " } else { "" };
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Row-inserts `letter`, returning the bumped entry if any.
pub fn insert(row: &mut Vec<u32>, letter: u32) -> Option<u32> {
    let at = row.partition_point(|&y| y <= letter);
    if at == row.len() {
        row.push(letter);
        None
    } else {
        Some(std::mem::replace(&mut row[at], letter))
    }
}

/// Incremental insertion tableau (the `P` tableau only).
#[derive(Debug, Clone, Default)]
pub struct Insertion {
    rows: Vec<Vec<u32>>,
}

impl Insertion {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `letter`, returning the 0-indexed row where the new box was
    /// created. `on_bump(r, y)` is called when `y` is bumped out of row `r`
    /// (0-indexed).
    pub fn push_with(&mut self, letter: u32, mut on_bump: impl FnMut(usize, u32)) -> usize {
        let mut carry = letter;
        let mut r = 0;
        loop {
            if r == self.rows.len() {
                self.rows.push(vec![carry]);
                return r;
            }
            match insert(&mut self.rows[r], carry) {
                None => return r,
                Some(bumped) => {
                    on_bump(r, bumped);
                    carry = bumped;
                    r += 1;
                }
            }
        }
    }

    pub fn push(&mut self, letter: u32) -> usize {
        self.push_with(letter, |_, _| {})
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram::from_sorted_unchecked(self.rows.iter().map(Vec::len).collect())
    }
}

/// The pair `(P, Q)`: `P` holds letters, `Q` holds 1-based insertion times.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauPair {
    pub p: Vec<Vec<u32>>,
    pub q: Vec<Vec<usize>>,
}

impl TableauPair {
    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram::from_sorted_unchecked(self.p.iter().map(Vec::len).collect())
    }

    /// Checks the semistandard/standard invariants for a word of length `n`.
    pub fn is_valid(&self, n: usize) -> bool {
        let p_shape: Vec<usize> = self.p.iter().map(Vec::len).collect();
        let q_shape: Vec<usize> = self.q.iter().map(Vec::len).collect();
        if p_shape != q_shape || p_shape.windows(2).any(|w| w[0] < w[1]) || p_shape.contains(&0) {
            return false;
        }
        let p_rows = self.p.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
        let q_rows = self.q.iter().all(|row| row.windows(2).all(|w| w[0] < w[1]));
        let columns_ok = (1..self.p.len())
            .all(|r| (0..self.p[r].len()).all(|c| self.p[r - 1][c] < self.p[r][c] && self.q[r - 1][c] < self.q[r][c]));
        let mut seen: Vec<usize> = self.q.iter().flatten().copied().collect();
        seen.sort_unstable();
        p_rows && q_rows && columns_ok && seen == (1..=n).collect::<Vec<_>>()
    }
}

/// Full RSK: the insertion tableau `P` and recording tableau `Q`.
pub fn rsk(w: &Word) -> TableauPair {
    let mut ins = Insertion::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (t, &letter) in w.letters().iter().enumerate() {
        let r = ins.push(letter);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(t + 1);
    }
    TableauPair { p: ins.rows, q }
}

/// `shRSK(w)` without building `Q`.
pub fn sh_rsk(w: &Word) -> YoungDiagram {
    sh_rsk_letters(w.letters())
}

pub(crate) fn sh_rsk_letters(letters: &[u32]) -> YoungDiagram {
    let mut ins = Insertion::new();
    for &l in letters {
        ins.push(l);
    }
    ins.shape()
}

/// Letters bumped from row `k` into row `k + 1` (rows 1-indexed), in the
/// order they are bumped. `bump_stream(w, 0)` is `w` itself.
pub fn bump_stream(w: &Word, k: usize) -> Word {
    if k == 0 {
        return w.clone();
    }
    let mut ins = Insertion::new();
    let mut out = Vec::new();
    for &l in w.letters() {
        ins.push_with(l, |r, y| {
            if r + 1 == k {
                out.push(y);
            }
        });
    }
    Word::from_parts_unchecked(out, w.alphabet())
}

/// Relabels `w` onto `[n]` with distinct letters: smaller letters get smaller
/// labels, and equal letters are numbered left to right.
pub fn standardize(w: &Word) -> Word {
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by_key(|&i| (w.letters()[i], i));
    let mut out = vec![0u32; w.len()];
    for (label, &i) in order.iter().enumerate() {
        out[i] = label as u32 + 1;
    }
    Word::from_parts_unchecked(out, w.len() as u32)
}

/// Positions (0-indexed, increasing) of the letters that make up
/// `bump_stream(w, k)`, identified through the standardization of `w`.
pub fn bumped_positions(w: &Word, k: usize) -> Vec<usize> {
    let std = standardize(w);
    let bumped: HashSet<u32> = bump_stream(&std, k).letters().iter().copied().collect();
    std.letters().iter().enumerate().filter(|(_, l)| bumped.contains(l)).map(|(i, _)| i).collect()
}

/// The letters of `bump_stream(w, k)` in the order they appear in `w`.
///
/// With repeated letters the positions are resolved through
/// [`standardize`], so equal letters are told apart by position.
pub fn subsequence_in_original_order(w: &Word, k: usize) -> Word {
    let letters = bumped_positions(w, k).into_iter().map(|i| w.letters()[i]).collect();
    Word::from_parts_unchecked(letters, w.alphabet())
}

/// `w` with every letter smaller than `k` deleted.
pub fn restrict_geq(w: &Word, k: u32) -> Word {
    let letters = w.letters().iter().copied().filter(|&l| l >= k).collect();
    Word::from_parts_unchecked(letters, w.alphabet())
}

/// `w` with every letter larger than `k` deleted.
pub fn restrict_leq(w: &Word, k: u32) -> Word {
    let letters = w.letters().iter().copied().filter(|&l| l <= k).collect();
    Word::from_parts_unchecked(letters, w.alphabet())
}
