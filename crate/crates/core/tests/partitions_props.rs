mod common;

use common::*;
use num_traits::One;
use proptest::prelude::*;
use qtau::algebra::Scalar;
use qtau::partitions::{b_lambda, binomial, enumerate_in_box, occupation_from_partition, partition_from_occupation};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn conjugation_is_an_involution(l in partition(12)) {
        prop_assert_eq!(l.conjugate().conjugate(), l);
    }

    #[test]
    fn frobenius_weight(l in partition(12)) {
        let f = l.frobenius();
        let arms_legs: usize = f.pairs.iter().map(|&(a, b)| a + b).sum();
        prop_assert_eq!(arms_legs + f.rank(), l.weight());
    }

    #[test]
    fn b_lambda_at_zero_is_one(l in partition(12)) {
        prop_assert_eq!(b_lambda(&l).eval(&Scalar::from_integer(0.into())), Scalar::one());
    }
}

#[test]
fn box_counts_are_binomial() {
    for n in 0..=6 {
        for m in 0..=6 {
            assert_eq!(enumerate_in_box(n, m).len() as u128, binomial(n + m, n), "N={n} M={m}");
        }
    }
}

#[test]
fn occupation_round_trip() {
    for n in 0..=4 {
        for m in 0..=4 {
            for l in enumerate_in_box(n, m) {
                let occ = occupation_from_partition(&l, n, m).unwrap();
                assert_eq!(occ.particles(), n);
                assert_eq!(partition_from_occupation(&occ), l);
            }
        }
    }
}
