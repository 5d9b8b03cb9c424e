//! Measured outcomes of comparisons that are not identities at finite size.
//! These pin what the library reports; none of them is an acceptance gate.

mod common;

use common::*;
use num_traits::Zero;
use qtau::algebra::scalar::frac;
use qtau::fock::{oracle_pairing, Model};
use qtau::partitions::Partition;
use qtau::phase_model::{correlation_am, correlation_am_literal, factorization_experiment, BoxSpec, CorrelationMode};
use qtau::qboson_model::{graded_disagreements, scalar_product_q, QBosonSpec, QScalarMode};
use qtau::symfunc::PointSet;

#[test]
fn literal_prefactor_form_is_not_proportional_to_the_pairing() {
    let (n, m) = (2, 3);
    let b = BoxSpec::new(n, m);
    let mut ratios = Vec::new();
    for shift in 0..3 {
        let u = pts(&[(1 + shift, 2), (-2, 3 + shift)]);
        let v = pts(&[(2, 5 + shift), (5, 4)]);
        let x = u.powered(2);
        let y = PointSet::new(v.powered(2).points()[..n - 1].to_vec());
        let oracle = oracle_pairing(&Model::Phase, m, &x, &y, Some(1)).unwrap();
        assert_eq!(correlation_am(&x, &y, 1, b, CorrelationMode::Det).unwrap(), oracle);
        let literal = correlation_am_literal(&u, &v, 1, b).unwrap();
        assert!(!oracle.is_zero());
        ratios.push(literal / oracle);
    }
    assert!(ratios.windows(2).any(|w| w[0] != w[1]), "ratio unexpectedly constant: {ratios:?}");
}

#[test]
fn literal_form_needs_even_column_exponent() {
    let u = pts(&[(1, 2), (2, 3)]);
    let v = pts(&[(1, 5), (3, 4)]);
    assert!(matches!(correlation_am_literal(&u, &v, 0, BoxSpec::new(2, 2)), Err(qtau::Error::Parity(3))));
}

#[test]
fn full_box_sums_differ_outside_the_graded_window() {
    let x = pts(&[(1, 2), (-1, 3)]);
    let y = pts(&[(2, 5), (3, 7)]);
    let spec = QBosonSpec::new(2, 2, frac(1, 3));
    let hl = scalar_product_q(&x, &y, &spec, QScalarMode::HlSum).unwrap();
    for mode in [QScalarMode::DetQuotient, QScalarMode::BigSchur, QScalarMode::TwistedSchur] {
        assert_ne!(scalar_product_q(&x, &y, &spec, mode).unwrap(), hl, "{}", mode.as_str());
        assert!(graded_disagreements(&x, &y, &spec, QScalarMode::HlSum, mode, 2).unwrap().is_empty());
        assert!(!graded_disagreements(&x, &y, &spec, QScalarMode::HlSum, mode, 4).unwrap().is_empty());
    }
}

#[test]
fn finite_box_factorization_is_not_exact() {
    let x = pts(&[(1, 2), (-1, 3)]);
    let y = pts(&[(2, 5), (3, 7)]);
    for m in 1..=4 {
        let r = factorization_experiment(&Partition::from_parts(&[1]), &Partition::from_parts(&[1]), &x, &y, BoxSpec::new(2, m));
        assert!(!r.holds(), "M={m}");
    }
}
