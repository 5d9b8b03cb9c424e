//! Miwa times `t_n = (1/n) Σ_j x_j^n`, the Q-twist, and Schur functions in Miwa form.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::scalar::{self, powi, Scalar};
use crate::algebra::series::{exp_coefficients, exp_generating, TruncatedSeries};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symfunc::{jacobi_trudi, PointSet};

/// `(t_1, …, t_{n_max})`; every later time is zero.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct MiwaCoords {
    n_max: usize,
    #[serde(with = "scalar::vec_as_string")]
    t: Vec<Scalar>,
}

impl MiwaCoords {
    /// Times `t_1, t_2, …` from a slice; the support bound is its length.
    pub fn new(t: Vec<Scalar>) -> Self {
        MiwaCoords { n_max: t.len(), t }
    }

    pub fn zero(n_max: usize) -> Self {
        Self::new(vec![Scalar::zero(); n_max])
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn times(&self) -> &[Scalar] {
        &self.t
    }

    /// `t_n` (one-based); zero beyond the support.
    pub fn get(&self, n: usize) -> Scalar {
        assert!(n >= 1, "Miwa times are indexed from 1");
        self.t.get(n - 1).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn from_points(x: &PointSet, n_max: usize) -> Self {
        Self::new((1..=n_max).map(|n| x.iter().map(|xi| powi(xi, n as i64)).fold(Scalar::zero(), |a, b| a + b) / scalar::int(n as i64)).collect())
    }

    /// Same times with the support bound raised to at least `n` (zero-filled).
    pub fn padded(&self, n: usize) -> Self {
        let mut t = self.t.clone();
        if t.len() < n {
            t.resize(n, Scalar::zero());
        }
        Self::new(t)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Scalar, Scalar) -> Scalar) -> Self {
        let n = self.n_max.max(other.n_max);
        Self::new((1..=n).map(|k| f(self.get(k), other.get(k))).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.t.iter().map(|a| a * c).collect())
    }

    /// `T_n = (1 − q^n) t_n`
    pub fn twist(&self, q: &Scalar) -> Self {
        Self::new(self.t.iter().enumerate().map(|(i, a)| (Scalar::one() - powi(q, i as i64 + 1)) * a).collect())
    }

    /// `h_0(t), …, h_kmax(t)` from `exp(Σ t_n z^n)`.
    pub fn h_values(&self, kmax: usize) -> Vec<Scalar> {
        exp_coefficients(&self.t, kmax)
    }

    pub fn exp_generating(&self, cutoff: u32) -> TruncatedSeries {
        exp_generating(&self.t, cutoff)
    }
}

/// `T(α/β)`: times of the supersymmetric alphabet, `(1/n)(Σ α^n − Σ (−β)^n)`.
pub fn supersymmetric_times(alpha: &PointSet, beta: &PointSet, n_max: usize) -> MiwaCoords {
    MiwaCoords::from_points(alpha, n_max).sub(&MiwaCoords::from_points(&beta.negated(), n_max))
}

/// `det(h_{λ_i − i + j}(t))`. Errors if the support is too small to be faithful.
pub fn schur_in_miwa(lambda: &Partition, t: &MiwaCoords) -> Result<Scalar> {
    if t.n_max() < lambda.weight() {
        return Err(Error::InsufficientSupport { n_max: t.n_max(), weight: lambda.weight() });
    }
    let h = t.h_values(lambda.first_part() + lambda.length());
    Ok(jacobi_trudi(lambda, &Partition::empty(), |k| h[k].clone()))
}

/// Skew version `det(h_{λ_i − µ_j − i + j}(t))`, zero unless `µ ⊆ λ`.
pub fn skew_schur_in_miwa(lambda: &Partition, mu: &Partition, t: &MiwaCoords) -> Result<Scalar> {
    if t.n_max() < lambda.weight() {
        return Err(Error::InsufficientSupport { n_max: t.n_max(), weight: lambda.weight() });
    }
    if !mu.is_contained_in(lambda) {
        return Ok(Scalar::zero());
    }
    let h = t.h_values(lambda.first_part() + lambda.length());
    Ok(jacobi_trudi(lambda, mu, |k| h[k].clone()))
}
