use num_traits::{One, Zero};

use super::{h_values, PointSet};
use crate::algebra::linalg::det;
use crate::algebra::scalar::{powi, Scalar};
use crate::error::Result;
use crate::partitions::Partition;

/// `Π_{i<j} (x_i − x_j)`
pub fn vandermonde(x: &PointSet) -> Scalar {
    let p = x.points();
    let mut acc = Scalar::one();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            acc *= &p[i] - &p[j];
        }
    }
    acc
}

/// `det(h_{λ_i − µ_j − i + j})` for any complete-homogeneous family `h`
/// (negative indices read as zero).
pub fn jacobi_trudi(lambda: &Partition, mu: &Partition, h: impl Fn(usize) -> Scalar) -> Scalar {
    let n = lambda.length();
    let m: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let idx = lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        Scalar::zero()
                    } else {
                        h(idx as usize)
                    }
                })
                .collect()
        })
        .collect();
    det(&m)
}

pub fn schur_jacobi_trudi(lambda: &Partition, x: &PointSet) -> Scalar {
    let h = h_values(x, lambda.first_part() + lambda.length());
    jacobi_trudi(lambda, &Partition::empty(), |k| h[k].clone())
}

/// Bialternant `det(x_i^{λ_k − k + N}) / Δ(x)`; the points must be distinct.
pub fn schur_bialternant(lambda: &Partition, x: &PointSet) -> Result<Scalar> {
    x.require_distinct()?;
    let n = x.len();
    if lambda.length() > n {
        return Ok(Scalar::zero());
    }
    let m: Vec<Vec<Scalar>> = x
        .iter()
        .map(|xi| (0..n).map(|k| powi(xi, (lambda.part(k) + n - k - 1) as i64)).collect())
        .collect();
    Ok(det(&m) / vandermonde(x))
}

/// Schur polynomial value; bialternant for distinct points, Jacobi-Trudi otherwise.
pub fn schur_eval(lambda: &Partition, x: &PointSet) -> Scalar {
    if lambda.length() > x.len() {
        return Scalar::zero();
    }
    if x.is_distinct() {
        schur_bialternant(lambda, x).expect("distinct points")
    } else {
        schur_jacobi_trudi(lambda, x)
    }
}

/// `s_{λ/µ}(x)`, zero unless `µ ⊆ λ`.
pub fn skew_schur_eval(lambda: &Partition, mu: &Partition, x: &PointSet) -> Scalar {
    if !mu.is_contained_in(lambda) {
        return Scalar::zero();
    }
    let h = h_values(x, lambda.first_part() + lambda.length());
    jacobi_trudi(lambda, mu, |k| h[k].clone())
}
