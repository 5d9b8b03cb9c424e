mod common;

use common::*;
use proptest::prelude::*;
use qtau::algebra::scalar::{frac, int};
use qtau::fock::{bethe_state, build_monodromy, creation_operators_commute, dual_bethe_state, oracle_pairing, Model, SectorBasis};
use qtau::phase_model::{correlation_am, scalar_product, BoxSpec, CorrelationMode, ScalarMode};
use qtau::qboson_model::{hl_sum_site_normalized, QBosonSpec};
use qtau::symfunc::{schur_eval, PointSet};
use qtau::Error;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn phase_oracle_matches_both_modes(n in 1usize..=3, m in 0usize..=3, seed in any::<u64>()) {
        let mut rng = qtau::suite::sample::rng(seed);
        let x = qtau::suite::sample::points(&mut rng, n);
        let y = qtau::suite::sample::points(&mut rng, n);
        let o = oracle_pairing(&Model::Phase, m, &x, &y, None).unwrap();
        let b = BoxSpec::new(n, m);
        prop_assert_eq!(&o, &scalar_product(&x, &y, b, ScalarMode::Det).unwrap());
        prop_assert_eq!(&o, &scalar_product(&x, &y, b, ScalarMode::SchurSum).unwrap());
    }

    #[test]
    fn phase_coefficients(n in 1usize..=3, m in 0usize..=3, y in points(3)) {
        let y = PointSet::new(y.points()[..n].to_vec());
        let v = bethe_state(&Model::Phase, m, &y);
        for (l, c) in SectorBasis::new(m, n).partitions(n).iter().zip(&v) {
            prop_assert_eq!(c, &schur_eval(l, &y));
        }
    }

    #[test]
    fn qboson_oracle_matches_normalized_sum(n in 1usize..=2, m in 0usize..=3, qi in 0usize..3, x in points(2), y in points(2)) {
        let q = [frac(1, 4), frac(1, 3), frac(2, 5)][qi].clone();
        let x = PointSet::new(x.points()[..n].to_vec());
        let y = PointSet::new(y.points()[..n].to_vec());
        let o = oracle_pairing(&Model::QBoson(q.clone()), m, &x, &y, None).unwrap();
        prop_assert_eq!(o, hl_sum_site_normalized(&x, &y, &QBosonSpec::new(n, m, q)).unwrap());
    }

    #[test]
    fn correlation_insertion(x in points(2), y in points(1)) {
        let b = BoxSpec::new(2, 3);
        for site in 0..=3 {
            let o = oracle_pairing(&Model::Phase, 3, &x, &y, Some(site)).unwrap();
            prop_assert_eq!(&o, &correlation_am(&x, &y, site, b, CorrelationMode::Det).unwrap());
            prop_assert_eq!(&o, &correlation_am(&x, &y, site, b, CorrelationMode::SkewSum).unwrap());
        }
    }
}

#[test]
fn monodromy_grading_is_structural() {
    for model in [Model::Phase, Model::QBoson(frac(1, 4))] {
        let (basis, t) = build_monodromy(&model, 2, 3, &frac(2, 3)).unwrap();
        assert_eq!((t.a.shift, t.b.shift, t.c.shift, t.d.shift), (0, 1, -1, 0));
        for op in [&t.a, &t.b, &t.c, &t.d] {
            assert!(op.respects_grading(&basis));
        }
        let b0 = t.b.sector_operator(0).unwrap();
        assert_eq!((b0.source, b0.target), (0, 1));
        assert!(t.c.sector_operator(0).is_none());
        assert!(t.b.sector_operator(3).is_none());
    }
    assert!(matches!(build_monodromy(&Model::Phase, 1, 1, &int(0)), Err(Error::ZeroParameter)));
}

#[test]
fn single_site_entries() {
    let (_, t) = build_monodromy(&Model::Phase, 0, 2, &frac(1, 3)).unwrap();
    for k in 0..2 {
        let b = t.b.sector_operator(k).unwrap().matrix.to_dense();
        assert_eq!(b, vec![vec![int(1)]]);
    }
}

#[test]
fn commutation() {
    for m in 0..=3 {
        assert!(creation_operators_commute(&Model::Phase, m, 3, &frac(1, 2), &frac(-2, 3)));
        assert!(creation_operators_commute(&Model::QBoson(frac(2, 5)), m, 3, &frac(1, 2), &frac(-2, 3)));
    }
}

#[test]
fn vacuum_cases() {
    let e = PointSet::empty();
    assert_eq!(bethe_state(&Model::Phase, 3, &e), vec![int(1)]);
    assert_eq!(dual_bethe_state(&Model::Phase, 3, &e), vec![int(1)]);
    assert_eq!(oracle_pairing(&Model::Phase, 3, &e, &e, None).unwrap(), int(1));
    let y = pts(&[(3, 4)]);
    let v = bethe_state(&Model::Phase, 2, &y);
    assert_eq!(v, vec![int(1), frac(3, 4), frac(9, 16)]);
}
