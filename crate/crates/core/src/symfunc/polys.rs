//! Symmetric polynomials as truncated series in symbolic variables, for graded
//! identity checks.

use num_traits::{One, Zero};

use super::hall_littlewood::{for_each_distinct_permutation, hl_monomial_expansion, schur_monomial_expansion};
use super::MonomialExpansion;
use crate::algebra::scalar::Scalar;
use crate::algebra::TruncatedSeries;
use crate::partitions::Partition;

/// Variable names `x1..xn, y1..yn`.
pub fn xy_variables(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).chain((1..=n).map(|i| format!("y{i}"))).collect()
}

/// Which half of an `x, y` variable list a polynomial lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    X,
    Y,
}

/// Layout of `n` x-variables followed by `n` y-variables, truncated at `cutoff`.
#[derive(Clone, Debug)]
pub struct XYSpace {
    pub n: usize,
    pub cutoff: u32,
    names: Vec<String>,
}

impl XYSpace {
    pub fn new(n: usize, cutoff: u32) -> Self {
        XYSpace { n, cutoff, names: xy_variables(n) }
    }

    pub fn names(&self) -> Vec<&str> {
        self.names.iter().map(String::as_str).collect()
    }

    pub fn zero(&self) -> TruncatedSeries {
        TruncatedSeries::zero(&self.names(), self.cutoff)
    }

    pub fn one(&self) -> TruncatedSeries {
        TruncatedSeries::one(&self.names(), self.cutoff)
    }

    fn offset(&self, a: Alphabet) -> usize {
        match a {
            Alphabet::X => 0,
            Alphabet::Y => self.n,
        }
    }

    /// `c · m_µ` in one alphabet.
    pub fn monomial_symmetric(&self, mu: &Partition, a: Alphabet, c: &Scalar) -> TruncatedSeries {
        let mut out = self.zero();
        if mu.length() > self.n || c.is_zero() {
            return out;
        }
        let mut exps: Vec<usize> = (0..self.n).map(|i| mu.part(i)).collect();
        exps.sort_unstable();
        let off = self.offset(a);
        for_each_distinct_permutation(&mut exps, &mut |alpha| {
            let mut e = vec![0u32; 2 * self.n];
            for (i, &k) in alpha.iter().enumerate() {
                e[off + i] = k as u32;
            }
            out.add_term(e, c.clone());
        });
        out
    }

    /// A monomial expansion with Q specialized to `q`.
    pub fn from_expansion(&self, e: &MonomialExpansion, q: &Scalar, a: Alphabet) -> TruncatedSeries {
        let mut out = self.zero();
        for (mu, c) in &e.coeffs {
            let v = c.eval(q);
            out = out.add(&self.monomial_symmetric(mu, a, &v)).expect("same space");
        }
        out
    }

    pub fn schur(&self, lambda: &Partition, a: Alphabet) -> TruncatedSeries {
        self.from_expansion(&schur_monomial_expansion(lambda), &Scalar::zero(), a)
    }

    pub fn hall_littlewood(&self, lambda: &Partition, q: &Scalar, a: Alphabet) -> TruncatedSeries {
        self.from_expansion(&hl_monomial_expansion(lambda), q, a)
    }

    /// `Π_{j,k} (1 − q x_j y_k)/(1 − x_j y_k)`; `q = 0` gives the Schur Cauchy kernel.
    pub fn cauchy_kernel(&self, q: &Scalar) -> TruncatedSeries {
        let one_minus_q = Scalar::one() - q;
        let mut acc = self.one();
        for j in 0..self.n {
            for k in 0..self.n {
                // 1 + (1 − q) Σ_{r ≥ 1} (x_j y_k)^r
                let mut f = self.one();
                for r in 1..=self.cutoff / 2 {
                    let mut e = vec![0u32; 2 * self.n];
                    e[j] = r;
                    e[self.n + k] = r;
                    f.add_term(e, one_minus_q.clone());
                }
                acc = acc.mul(&f).expect("same space");
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{frac, int};
    use crate::partitions::partitions_up_to;
    use crate::symfunc::{hall_littlewood_eval, schur_eval, PointSet};

    #[test]
    fn series_match_evaluation() {
        let sp = XYSpace::new(2, 8);
        let x = vec![frac(1, 2), int(-3)];
        let pt: Vec<Scalar> = x.iter().cloned().chain([int(1), int(1)]).collect();
        let q = frac(1, 3);
        for lam in partitions_up_to(4, 2) {
            let s = sp.schur(&lam, Alphabet::X);
            assert_eq!(s.eval(&pt), schur_eval(&lam, &PointSet::new(x.clone())));
            let h = sp.hall_littlewood(&lam, &q, Alphabet::X);
            assert_eq!(h.eval(&pt), hall_littlewood_eval(&lam, &PointSet::new(x.clone()), &q));
        }
    }

    #[test]
    fn schur_cauchy_two_variables() {
        let d = 4;
        let sp = XYSpace::new(2, 2 * d);
        let mut sum = sp.zero();
        for lam in partitions_up_to(d as usize, 2) {
            let t = sp.schur(&lam, Alphabet::X).mul(&sp.schur(&lam, Alphabet::Y)).unwrap();
            sum = sum.add(&t).unwrap();
        }
        assert_eq!(sum, sp.cauchy_kernel(&int(0)));
    }
}
