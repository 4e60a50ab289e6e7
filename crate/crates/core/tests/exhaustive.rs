//! Exhaustive checks of the combinatorial identities over every small word.

use schur_weyl::greene::{
    check_greene, check_lower_row_majorization, check_restriction_weak_majorization, greene_invariant, lis,
};
use schur_weyl::rsk::{bump_stream, restrict_leq, rsk, sh_rsk, standardize, Word};
use schur_weyl::sampling::enumerate_words;

const CAP: u128 = 10_000_000;

fn all_words(max_d: usize, max_n: usize) -> impl Iterator<Item = Word> {
    (1..=max_d).flat_map(move |d| (0..=max_n).flat_map(move |n| enumerate_words(d, n, CAP).unwrap()))
}

#[test]
fn first_row_is_longest_increasing_subsequence() {
    for w in all_words(4, 10) {
        assert_eq!(sh_rsk(&w).row(1), lis(&w), "{w}");
    }
}

#[test]
fn greene_prefix_sums() {
    for w in all_words(3, 8) {
        for k in 1..=w.len().max(1) {
            assert!(check_greene(&w, k).unwrap(), "{w} k={k}");
        }
    }
}

#[test]
fn greene_invariant_grows_in_k_up_to_n() {
    for w in all_words(3, 7) {
        let mut prev = 0;
        for k in 1..=w.len() + 1 {
            let g = greene_invariant(&w, k).unwrap();
            assert!(g >= prev && g <= w.len(), "{w}");
            prev = g;
        }
    }
}

#[test]
fn single_letter_changes() {
    for w in all_words(3, 8) {
        let d = w.alphabet();
        let before = sh_rsk(&w);
        for pos in 0..w.len() {
            for letter in 1..=d {
                let v = w.with_letter(pos, letter).unwrap();
                let after = sh_rsk(&v);
                for k in 1..=w.len() {
                    assert!(before.prefix(k).abs_diff(after.prefix(k)) <= 1, "{w} -> {v}");
                    assert!(before.row(k).abs_diff(after.row(k)) <= 2, "{w} -> {v}");
                }
            }
        }
    }
}

#[test]
fn greene_invariant_drops_by_at_most_one_per_letter() {
    for w in all_words(3, 6) {
        for pos in 0..w.len() {
            for letter in 1..=w.alphabet() {
                let v = w.with_letter(pos, letter).unwrap();
                for k in 1..=3 {
                    let a = greene_invariant(&w, k).unwrap();
                    let b = greene_invariant(&v, k).unwrap();
                    assert!(a.abs_diff(b) <= 1, "{w} -> {v} k={k}");
                }
            }
        }
    }
}

#[test]
fn bump_stream_carries_the_lower_rows() {
    for w in all_words(3, 8) {
        let shape = sh_rsk(&w);
        for k in 0..=shape.height() {
            assert_eq!(sh_rsk(&bump_stream(&w, k)), shape.drop_rows(k), "{w} k={k}");
        }
    }
}

#[test]
fn restricting_to_small_letters_shrinks_rows() {
    for w in all_words(3, 8) {
        let shape = sh_rsk(&w);
        for k in 1..=w.alphabet() {
            let small = sh_rsk(&restrict_leq(&w, k));
            assert!((1..=shape.height()).all(|i| small.row(i) <= shape.row(i)), "{w} k={k}");
        }
    }
}

#[test]
fn restriction_weak_majorization() {
    for w in all_words(3, 8) {
        for k in 1..=w.alphabet() {
            assert!(check_restriction_weak_majorization(&w, k), "{w} k={k}");
        }
    }
}

#[test]
fn lower_row_majorization_on_words() {
    for w in all_words(3, 7) {
        for k in 1..=3 {
            assert!(check_lower_row_majorization(&w, k), "{w} k={k}");
        }
    }
}

#[test]
fn standardization_keeps_the_shape() {
    for w in all_words(3, 7) {
        let s = standardize(&w);
        assert!(s.has_distinct_letters());
        assert_eq!(sh_rsk(&s), sh_rsk(&w), "{w}");
        assert!(rsk(&w).is_valid(w.len()));
    }
}
