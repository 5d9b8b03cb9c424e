//! Multivariate power series truncated in total degree.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::scalar::{self, Scalar};
use crate::error::{Error, Result};

/// Sparse series over named variables. Every stored exponent tuple has total
/// degree at most `cutoff`; absent tuples are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    variables: Vec<String>,
    cutoff: u32,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

fn total(e: &[u32]) -> u32 {
    e.iter().sum()
}

impl TruncatedSeries {
    pub fn zero(variables: &[&str], cutoff: u32) -> Self {
        TruncatedSeries { variables: variables.iter().map(|s| s.to_string()).collect(), cutoff, terms: BTreeMap::new() }
    }

    pub fn constant(variables: &[&str], cutoff: u32, c: Scalar) -> Self {
        let mut s = Self::zero(variables, cutoff);
        s.add_term(vec![0; variables.len()], c);
        s
    }

    pub fn one(variables: &[&str], cutoff: u32) -> Self {
        Self::constant(variables, cutoff, Scalar::one())
    }

    /// The series consisting of the single variable at `index`.
    pub fn variable(variables: &[&str], cutoff: u32, index: usize) -> Self {
        let mut e = vec![0; variables.len()];
        e[index] = 1;
        Self::monomial(variables, cutoff, e, Scalar::one())
    }

    pub fn monomial(variables: &[&str], cutoff: u32, exponents: Vec<u32>, c: Scalar) -> Self {
        assert_eq!(exponents.len(), variables.len(), "exponent tuple length");
        let mut s = Self::zero(variables, cutoff);
        s.add_term(exponents, c);
        s
    }

    /// An empty series sharing this series' variables and cutoff.
    pub fn empty_like(&self) -> Self {
        TruncatedSeries { variables: self.variables.clone(), cutoff: self.cutoff, terms: BTreeMap::new() }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Scalar {
        self.terms.get(exponents).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&vec![0; self.variables.len()])
    }

    /// Adds `c x^e`, dropping it if beyond the cutoff.
    pub fn add_term(&mut self, exponents: Vec<u32>, c: Scalar) {
        if c.is_zero() || total(&exponents) > self.cutoff {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Same series with a smaller cutoff.
    pub fn truncate(&self, cutoff: u32) -> Self {
        let cutoff = cutoff.min(self.cutoff);
        TruncatedSeries {
            variables: self.variables.clone(),
            cutoff,
            terms: self.terms.iter().filter(|(e, _)| total(e) <= cutoff).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Terms of total degree exactly `d`.
    pub fn graded_component(&self, d: u32) -> Self {
        let mut out = self.empty_like();
        out.terms = self.terms.iter().filter(|(e, _)| total(e) == d).map(|(e, c)| (e.clone(), c.clone())).collect();
        out
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.variables != other.variables {
            return Err(Error::VariableMismatch { left: self.variables.clone(), right: other.variables.clone() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.truncate(other.cutoff);
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = self.empty_like();
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect();
        out
    }

    /// Graded product, truncated at the smaller cutoff.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let cutoff = self.cutoff.min(other.cutoff);
        let mut out = TruncatedSeries { variables: self.variables.clone(), cutoff, terms: BTreeMap::new() };
        for (ea, ca) in &self.terms {
            let da = total(ea);
            if da > cutoff {
                continue;
            }
            for (eb, cb) in &other.terms {
                if da + total(eb) > cutoff {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.var_refs(), self.cutoff);
        for _ in 0..k {
            acc = acc.mul(self).expect("same variables");
        }
        acc
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::Singular("series with zero constant term"));
        }
        // a = c0 (1 - r)  =>  1/a = c0^{-1} Σ r^k
        let inv_c0 = c0.recip();
        let mut r = self.scale(&-inv_c0.clone());
        r.add_term(vec![0; self.variables.len()], Scalar::one());
        let mut acc = Self::one(&self.var_refs(), self.cutoff);
        let mut pw = acc.clone();
        for _ in 0..self.cutoff {
            pw = pw.mul(&r)?;
            if pw.is_zero() {
                break;
            }
            acc = acc.add(&pw)?;
        }
        Ok(acc.scale(&inv_c0))
    }

    /// Substitutes exact values for every variable.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.variables.len(), "point dimension");
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&k, x)| acc * scalar::powi(x, k as i64))
            })
            .fold(Scalar::zero(), |a, b| a + b)
    }

    /// Total degrees at which `self` and `other` differ, up to the shared cutoff.
    pub fn differing_degrees(&self, other: &Self) -> Result<Vec<u32>> {
        let diff = self.sub(other)?;
        let mut ds: Vec<u32> = diff.terms.keys().map(|e| total(e)).collect();
        ds.sort_unstable();
        ds.dedup();
        Ok(ds)
    }

    fn var_refs(&self) -> Vec<&str> {
        self.variables.iter().map(String::as_str).collect()
    }
}

/// Graded product of two series; errors when the variable lists differ.
pub fn series_product(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.mul(b)
}

/// Coefficients of `exp(Σ_k t_k z^k)` through `z^cutoff`, where `t[k-1]` is `t_k`.
/// Uses the recurrence `k h_k = Σ_{i=1}^{k} i t_i h_{k-i}`.
pub fn exp_coefficients(t: &[Scalar], cutoff: usize) -> Vec<Scalar> {
    let mut h = vec![Scalar::one()];
    for k in 1..=cutoff {
        let mut acc = Scalar::zero();
        for i in 1..=k.min(t.len()) {
            if !t[i - 1].is_zero() {
                acc += &t[i - 1] * scalar::int(i as i64) * &h[k - i];
            }
        }
        h.push(acc / scalar::int(k as i64));
    }
    h
}

/// `exp(Σ_k t_k z^k)` as a series in the single variable `z`.
pub fn exp_generating(t: &[Scalar], cutoff: u32) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(&["z"], cutoff);
    for (k, c) in exp_coefficients(t, cutoff as usize).into_iter().enumerate() {
        s.add_term(vec![k as u32], c);
    }
    s
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 + O({})", self.cutoff + 1);
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (v, k) in self.variables.iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{k}")?,
                }
            }
        }
        write!(f, " + O({})", self.cutoff + 1)
    }
}
