//! Every permutation up to size 8 (9 for the majorization check).

use schur_weyl::greene::{check_lower_row_majorization, lis};
use schur_weyl::rsk::{bump_stream, sh_rsk, Word};
use schur_weyl::viennot::{build_diagram, iterated_shape, skeleton_word};

/// Heap's algorithm.
fn for_each_permutation(n: usize, mut f: impl FnMut(&[u32])) {
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

#[test]
fn heap_enumerates_factorially_many() {
    let mut count = 0;
    for_each_permutation(6, |_| count += 1);
    assert_eq!(count, 720);
}

#[test]
fn viennot_agrees_with_insertion() {
    for n in 0..=8 {
        for_each_permutation(n, |p| {
            let w = Word::from_letters(p.to_vec());
            let d = build_diagram(&w).unwrap();
            assert_eq!(d.lines.len(), lis(&w), "{w}");
            assert_eq!(skeleton_word(&d).letters(), bump_stream(&w, 1).letters(), "{w}");
            assert_eq!(iterated_shape(&w).unwrap(), sh_rsk(&w), "{w}");
            assert!(d.is_non_crossing(), "{w}");
        });
    }
}

#[test]
fn lower_row_majorization_on_permutations() {
    for n in 0..=9 {
        for_each_permutation(n, |p| {
            let w = Word::from_letters(p.to_vec());
            for k in 1..=3 {
                assert!(check_lower_row_majorization(&w, k), "{w} k={k}");
            }
        });
    }
}
