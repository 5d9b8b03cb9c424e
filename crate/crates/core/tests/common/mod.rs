#![allow(dead_code)]

use proptest::prelude::*;
use qtau::algebra::scalar::frac;
use qtau::algebra::Scalar;
use qtau::partitions::{partitions_up_to, Partition};
use qtau::symfunc::PointSet;

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (-12i64..=12, 1i64..=9).prop_map(|(p, q)| frac(p, q))
}

pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    (1i64..=12, any::<bool>(), 1i64..=9).prop_map(|(p, neg, q)| frac(if neg { -p } else { p }, q))
}

/// `n` pairwise distinct nonzero rationals.
pub fn points(n: usize) -> impl Strategy<Value = PointSet> {
    prop::collection::btree_set(nonzero_scalar(), n).prop_map(|s| PointSet::new(s.into_iter().collect()))
}

pub fn q_value() -> impl Strategy<Value = Scalar> {
    (2i64..=9).prop_flat_map(|d| (1..d).prop_map(move |n| frac(n, d)))
}

/// A partition of weight at most `d`.
pub fn partition(d: usize) -> impl Strategy<Value = Partition> {
    let all = partitions_up_to(d, usize::MAX);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

pub fn pts(v: &[(i64, i64)]) -> PointSet {
    PointSet::new(v.iter().map(|&(p, q)| frac(p, q)).collect())
}
