use proptest::prelude::*;
use schur_weyl::greene::{check_lower_row_majorization, lis};
use schur_weyl::rsk::{bump_stream, bumped_positions, rsk, sh_rsk, standardize, Word};
use schur_weyl::viennot::{build_diagram, iterated_shape, skeleton_word};

fn word(max_d: u32, max_n: usize) -> impl Strategy<Value = Word> {
    (1..=max_d)
        .prop_flat_map(move |d| prop::collection::vec(1..=d, 0..=max_n).prop_map(move |l| Word::new(l, d).unwrap()))
}

fn permutation(max_n: usize) -> impl Strategy<Value = Word> {
    (0..=max_n).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle()).prop_map(Word::from_letters)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn tableaux_are_valid(w in word(6, 60)) {
        let pair = rsk(&w);
        prop_assert!(pair.is_valid(w.len()));
        prop_assert_eq!(pair.shape(), sh_rsk(&w));
    }

    #[test]
    fn first_row_matches_lis(w in word(10, 200)) {
        prop_assert_eq!(sh_rsk(&w).row(1), lis(&w));
    }

    #[test]
    fn standardizing_commutes_with_shape(w in word(5, 50)) {
        prop_assert_eq!(sh_rsk(&standardize(&w)), sh_rsk(&w));
    }

    #[test]
    fn bumped_positions_spell_the_bump_stream(w in word(5, 40), k in 1usize..4) {
        let s = standardize(&w);
        let letters: Vec<u32> = bumped_positions(&s, k).iter().map(|&i| s.letters()[i]).collect();
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        let mut stream = bump_stream(&s, k).letters().to_vec();
        stream.sort_unstable();
        prop_assert_eq!(sorted, stream);
    }

    #[test]
    fn lower_rows_majorize(w in word(6, 60), k in 1usize..4) {
        prop_assert!(check_lower_row_majorization(&w, k));
    }

    #[test]
    fn viennot_matches_insertion(w in permutation(100)) {
        let diagram = build_diagram(&w).unwrap();
        prop_assert_eq!(diagram.lines.len(), lis(&w));
        prop_assert_eq!(skeleton_word(&diagram).letters().to_vec(), bump_stream(&w, 1).letters().to_vec());
        prop_assert_eq!(diagram.skeleton.len(), w.len() - lis(&w));
        prop_assert_eq!(iterated_shape(&w).unwrap(), sh_rsk(&w));
        prop_assert!(diagram.is_non_crossing());
    }
}
