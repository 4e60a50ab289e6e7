//! Randomized instances of the deterministic inequalities.

use proptest::prelude::*;
use schur_weyl::bounds::{check_rearrangement, itw, itw_trivial_bound, log_sum_bound, thresholded_rearrangement_check};
use schur_weyl::metrics::{chi_sq, hellinger_sq, kl};
use schur_weyl::partitions::{dominates, weakly_dominates};
use schur_weyl::SortedDist;

/// A probability vector with every entry at least `floor` before
/// normalization.
fn prob_vec(d: usize, floor: f64) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(floor..1.0f64, d).prop_map(|w| {
        let s: f64 = w.iter().sum();
        w.iter().map(|x| x / s).collect()
    })
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

fn sorted_with_permutation(max_d: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (1..=max_d).prop_flat_map(|d| prob_vec(d, 1e-3)).prop_flat_map(|v| {
        let a = sorted(v);
        (Just(a.clone()), Just(a).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn distance_comparisons(d in 1usize..8, a in prob_vec(7, 0.0), b in prob_vec(7, 1e-6)) {
        let renorm = |v: &[f64]| { let s: f64 = v.iter().sum(); v.iter().map(|x| x / s).collect::<Vec<_>>() };
        let (a, b) = (renorm(&a[..d]), renorm(&b[..d]));
        for k in 1..=d {
            prop_assert!(hellinger_sq(&a, &b, k).unwrap() <= chi_sq(&a, &b, k).unwrap() + 1e-12);
        }
        prop_assert!(kl(&a, &b).unwrap() <= chi_sq(&a, &b, d).unwrap() + 1e-12);
        let identity: f64 = a.iter().zip(&b).map(|(x, y)| x * x / y).sum::<f64>() - 1.0;
        let chi = chi_sq(&a, &b, d).unwrap();
        prop_assert!((chi - identity).abs() <= 1e-12 * (1.0 + chi.abs()));
    }

    #[test]
    fn hellinger_triangle(d in 1usize..8, a in prob_vec(7, 0.0), b in prob_vec(7, 0.0), c in prob_vec(7, 0.0)) {
        let (a, b, c) = (&a[..d], &b[..d], &c[..d]);
        let h = |x: &[f64], y: &[f64]| hellinger_sq(x, y, d).unwrap().sqrt();
        prop_assert!(h(a, c) <= h(a, b) + h(b, c) + 1e-12);
    }

    #[test]
    fn itw_against_trivial_bound(v in (2usize..8).prop_flat_map(|d| prob_vec(d, 0.0)), k in 1usize..8) {
        let alpha = SortedDist::from_unsorted(v).unwrap();
        let k = k.min(alpha.d());
        let e = itw(&alpha, k);
        prop_assert!(e >= 0.0);
        if k == alpha.d() || alpha.get(k) > alpha.get(k + 1) {
            prop_assert!(e <= itw_trivial_bound(&alpha, k).unwrap() * (1.0 + 1e-12) + 1e-12);
        }
    }

    #[test]
    fn rearrangement((a, b) in sorted_with_permutation(8)) {
        prop_assert!(check_rearrangement(&a, &b).unwrap());
    }

    #[test]
    fn log_sum(v in (1usize..10).prop_flat_map(|d| prob_vec(d, 1e-4))) {
        prop_assert!(log_sum_bound(&sorted(v)).unwrap());
    }

    #[test]
    fn thresholded_rearrangement((a, b) in sorted_with_permutation(8), t in 0.0f64..1.0) {
        let d = a.len();
        prop_assume!(d >= 2);
        // Pick ζ inside one of the gaps.
        let k = 1 + ((t * (d - 1) as f64) as usize).min(d - 2);
        prop_assume!(a[k - 1] > a[k]);
        let zeta = a[k] + t.fract() * (a[k - 1] - a[k]) * 0.999;
        prop_assert!(thresholded_rearrangement_check(&a, &b, zeta).unwrap());
    }

    #[test]
    fn dominance_is_compatible_with_weak_dominance(a in prob_vec(5, 0.0), b in prob_vec(5, 0.0)) {
        let (a, b) = (sorted(a), sorted(b));
        if dominates(&a, &b).unwrap() {
            prop_assert!(weakly_dominates(&a, &b).unwrap());
        }
    }
}
