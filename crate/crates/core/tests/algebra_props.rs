mod common;

use common::*;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qtau::algebra::{exp_generating, series_product, Scalar, TruncatedSeries};

fn small_series() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(((0u32..3, 0u32..3), scalar()), 0..6).prop_map(|terms| {
        let mut s = TruncatedSeries::zero(&["a", "b"], 4);
        for ((i, j), c) in terms {
            s.add_term(vec![i, j], c);
        }
        s.truncate(4)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + Scalar::zero(), a.clone());
        prop_assert_eq!(&a * Scalar::one(), a);
    }

    #[test]
    fn series_product_commutes_and_associates(a in small_series(), b in small_series(), c in small_series()) {
        prop_assert_eq!(series_product(&a, &b).unwrap(), series_product(&b, &a).unwrap());
        let left = series_product(&series_product(&a, &b).unwrap(), &c).unwrap();
        let right = series_product(&a, &series_product(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn exponential_inverse(t in prop::collection::vec(scalar(), 1..6)) {
        let cutoff = 6;
        let neg: Vec<Scalar> = t.iter().map(|x| -x).collect();
        let prod = exp_generating(&t, cutoff).mul(&exp_generating(&neg, cutoff)).unwrap();
        prop_assert_eq!(prod, TruncatedSeries::one(&["z"], cutoff));
    }
}

#[test]
fn mismatched_variables_are_rejected() {
    let a = TruncatedSeries::one(&["a"], 2);
    let b = TruncatedSeries::one(&["b"], 2);
    assert!(a.mul(&b).is_err());
}
