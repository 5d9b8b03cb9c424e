//! Symmetric functions evaluated at exact rational points.

mod basis;
mod big_schur;
mod hall_littlewood;
mod kostka;
pub mod polys;
mod schur;

pub use basis::{basis_eval, e_values, h_values, p_value, BasisKind};
pub use big_schur::{big_schur_eval, q_coeff, q_coeffs, supersymmetric_schur_eval, supersymmetric_skew_expansion};
pub use hall_littlewood::{
    hall_littlewood_eval, hl_monomial_expansion, hl_symmetrization, hl_via_monomials, monomial_eval,
    schur_monomial_expansion, MonomialExpansion,
};
pub use kostka::{c_tilde_inverse_check, c_tilde_matrix, classical_limit_check, kostka_tables, tableau_count, KostkaTables};
pub use schur::{jacobi_trudi, schur_bialternant, schur_eval, schur_jacobi_trudi, skew_schur_eval, vandermonde};

use serde::{Deserialize, Serialize};

use crate::algebra::scalar::{self, Scalar};
use crate::error::{Error, Result};

/// An ordered list of spectral parameters.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointSet {
    #[serde(with = "scalar::vec_as_string")]
    points: Vec<Scalar>,
}

impl PointSet {
    pub fn new(points: Vec<Scalar>) -> Self {
        PointSet { points }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(Self::new(scalar::parse_scalar_list(s)?))
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Scalar] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.points.iter()
    }

    /// Every point multiplied by `c`.
    pub fn scaled(&self, c: &Scalar) -> Self {
        Self::new(self.points.iter().map(|x| x * c).collect())
    }

    pub fn negated(&self) -> Self {
        Self::new(self.points.iter().map(|x| -x).collect())
    }

    /// Elementwise `x^k`.
    pub fn powered(&self, k: i64) -> Self {
        Self::new(self.points.iter().map(|x| scalar::powi(x, k)).collect())
    }

    pub fn first_repeat(&self) -> Option<&Scalar> {
        for (i, a) in self.points.iter().enumerate() {
            if self.points[i + 1..].contains(a) {
                return Some(a);
            }
        }
        None
    }

    pub fn is_distinct(&self) -> bool {
        self.first_repeat().is_none()
    }

    pub fn require_distinct(&self) -> Result<()> {
        match self.first_repeat() {
            Some(a) => Err(Error::RepeatedPoint(scalar::format_scalar(a))),
            None => Ok(()),
        }
    }

    pub fn require_len(&self, what: &'static str, expected: usize) -> Result<()> {
        if self.len() != expected {
            return Err(Error::PointCount { what, expected, got: self.len() });
        }
        Ok(())
    }

    /// A copy with the points at `i` and `j` swapped.
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut p = self.points.clone();
        p.swap(i, j);
        Self::new(p)
    }

    pub fn concat(&self, other: &PointSet) -> Self {
        let mut p = self.points.clone();
        p.extend(other.points.iter().cloned());
        Self::new(p)
    }
}

impl From<Vec<Scalar>> for PointSet {
    fn from(points: Vec<Scalar>) -> Self {
        Self::new(points)
    }
}

impl std::fmt::Display for PointSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body: Vec<String> = self.points.iter().map(scalar::format_scalar).collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}
