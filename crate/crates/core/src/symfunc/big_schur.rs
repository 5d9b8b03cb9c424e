use num_traits::{One, Zero};

use super::{jacobi_trudi, schur_eval, skew_schur_eval, PointSet};
use crate::algebra::scalar::Scalar;
use crate::error::Result;
use crate::miwa::{schur_in_miwa, supersymmetric_times};
use crate::partitions::{enumerate_in_box, Partition};

/// `q_0, …, q_mmax` from `Π_j (1 − q y_j z)/(1 − y_j z)`, expanded factor by factor.
pub fn q_coeffs(y: &PointSet, q: &Scalar, mmax: usize) -> Vec<Scalar> {
    let mut c = vec![Scalar::zero(); mmax + 1];
    c[0] = Scalar::one();
    for yj in y.iter() {
        // times (1 − q y_j z)
        let qy = q * yj;
        for k in (1..=mmax).rev() {
            let sub = &qy * &c[k - 1];
            c[k] -= sub;
        }
        // times 1/(1 − y_j z)
        for k in 1..=mmax {
            let add = yj * &c[k - 1];
            c[k] += add;
        }
    }
    c
}

pub fn q_coeff(m: usize, y: &PointSet, q: &Scalar) -> Scalar {
    q_coeffs(y, q, m).pop().expect("nonempty")
}

/// `S_λ(y; q) = det(q_{λ_i − i + j})`
pub fn big_schur_eval(lambda: &Partition, y: &PointSet, q: &Scalar) -> Scalar {
    let c = q_coeffs(y, q, lambda.first_part() + lambda.length());
    jacobi_trudi(lambda, &Partition::empty(), |k| c[k].clone())
}

/// `s_λ(α/β)` as a Schur function of the supersymmetric Miwa times.
pub fn supersymmetric_schur_eval(lambda: &Partition, alpha: &PointSet, beta: &PointSet) -> Result<Scalar> {
    let t = supersymmetric_times(alpha, beta, lambda.weight().max(1));
    schur_in_miwa(lambda, &t)
}

/// `Σ_{µ ⊆ λ} s_{λ'/µ'}(β) s_µ(α)`, the skew expansion of the hook Schur function.
pub fn supersymmetric_skew_expansion(lambda: &Partition, alpha: &PointSet, beta: &PointSet) -> Scalar {
    let lc = lambda.conjugate();
    enumerate_in_box(lambda.length(), lambda.first_part())
        .into_iter()
        .filter(|mu| mu.is_contained_in(lambda))
        .map(|mu| skew_schur_eval(&lc, &mu.conjugate(), beta) * schur_eval(&mu, alpha))
        .fold(Scalar::zero(), |a, b| a + b)
}
