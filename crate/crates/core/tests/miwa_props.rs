mod common;

use common::*;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qtau::algebra::Scalar;
use qtau::miwa::{schur_in_miwa, MiwaCoords};
use qtau::partitions::Partition;
use qtau::symfunc::{big_schur_eval, schur_eval};
use qtau::Error;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn faithful_on_points(n in 1usize..=3, seed in any::<u64>(), l in partition(6)) {
        let x = qtau::suite::sample::points(&mut qtau::suite::sample::rng(seed), n);
        let t = MiwaCoords::from_points(&x, l.weight().max(1));
        prop_assert_eq!(schur_in_miwa(&l, &t).unwrap(), schur_eval(&l, &x));
    }

    #[test]
    fn twist_limits(x in points(2), l in partition(5)) {
        let t = MiwaCoords::from_points(&x, 5);
        prop_assert_eq!(t.twist(&Scalar::zero()), t.clone());
        let v = schur_in_miwa(&l, &t.twist(&Scalar::one())).unwrap();
        prop_assert_eq!(v.is_zero(), !l.is_empty());
    }

    #[test]
    fn supersymmetric_bridge(y in points(2), q in q_value(), l in partition(5)) {
        let t = MiwaCoords::from_points(&y, 5).add(&MiwaCoords::from_points(&y.scaled(&q), 5).scale(&-Scalar::one()));
        prop_assert_eq!(schur_in_miwa(&l, &t).unwrap(), big_schur_eval(&l, &y, &q));
    }
}

#[test]
fn insufficient_support_is_an_error() {
    let t = MiwaCoords::from_points(&pts(&[(1, 2)]), 2);
    let l = Partition::from_parts(&[2, 1]);
    assert!(matches!(schur_in_miwa(&l, &t), Err(Error::InsufficientSupport { n_max: 2, weight: 3 })));
}
