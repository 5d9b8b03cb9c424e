mod common;

use common::*;
use num_traits::Zero;
use proptest::prelude::*;
use qtau::algebra::Scalar;
use qtau::partitions::{partitions_of, partitions_up_to};
use qtau::symfunc::polys::{Alphabet, XYSpace};
use qtau::symfunc::{hall_littlewood_eval, kostka_tables, schur_bialternant, schur_eval, schur_jacobi_trudi, tableau_count};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn bialternant_matches_jacobi_trudi(n in 1usize..=4, seed in any::<u64>()) {
        let x = pts_from_seed(n, seed);
        for l in partitions_up_to(6, usize::MAX) {
            prop_assert_eq!(schur_bialternant(&l, &x).unwrap(), schur_jacobi_trudi(&l, &x), "{}", l);
        }
    }

    #[test]
    fn hall_littlewood_at_zero_is_schur(x in points(3), l in partition(6)) {
        prop_assert_eq!(hall_littlewood_eval(&l, &x, &Scalar::zero()), schur_eval(&l, &x));
    }

    #[test]
    fn kostka_expansion_evaluates(x in points(3), q in q_value(), d in 1usize..=5) {
        let t = kostka_tables(d);
        let p: Vec<Scalar> = t.order.iter().map(|mu| hall_littlewood_eval(mu, &x, &q)).collect();
        for (i, lam) in t.order.iter().enumerate() {
            let rhs = t.k[i].iter().zip(&p).fold(Scalar::zero(), |a, (k, pv)| a + k.eval(&q) * pv);
            prop_assert_eq!(schur_eval(lam, &x), rhs, "{}", lam);
        }
    }
}

fn pts_from_seed(n: usize, seed: u64) -> qtau::symfunc::PointSet {
    use qtau::suite::sample;
    sample::points(&mut sample::rng(seed), n)
}

#[test]
fn schur_cauchy_identity_through_degree() {
    for n in 1..=3 {
        let d = 6 - n;
        let sp = XYSpace::new(n, 2 * d as u32);
        let mut sum = sp.zero();
        for l in partitions_up_to(d, n) {
            sum = sum.add(&sp.schur(&l, Alphabet::X).mul(&sp.schur(&l, Alphabet::Y)).unwrap()).unwrap();
        }
        let kernel = sp.cauchy_kernel(&Scalar::zero());
        assert!(sum.differing_degrees(&kernel).unwrap().is_empty(), "N={n}");
    }
}

#[test]
fn classical_kostka_numbers() {
    let one = Scalar::from_integer(1.into());
    for d in 1..=5 {
        let t = kostka_tables(d);
        for (i, l) in t.order.iter().enumerate() {
            for (j, m) in t.order.iter().enumerate() {
                assert_eq!(t.k[i][j].eval(&one), Scalar::from_integer(tableau_count(l, m).into()), "{l} {m}");
            }
        }
    }
    assert_eq!(partitions_of(6).len(), 11);
}
