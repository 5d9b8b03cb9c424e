//! Hall-Littlewood P polynomials: symmetrization for distinct points, and a
//! tableau-built monomial expansion that works everywhere.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use super::PointSet;
use crate::algebra::scalar::{powi, Scalar};
use crate::algebra::QPoly;
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};

/// Coefficients of one symmetric polynomial in the monomial basis `m_µ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialExpansion {
    pub weight: usize,
    pub coeffs: BTreeMap<Partition, QPoly>,
}

impl MonomialExpansion {
    pub fn coeff(&self, mu: &Partition) -> QPoly {
        self.coeffs.get(mu).cloned().unwrap_or_else(QPoly::zero)
    }

    /// Value at the points with Q specialized to `q`.
    pub fn eval(&self, x: &PointSet, q: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .filter(|(mu, _)| mu.length() <= x.len())
            .map(|(mu, c)| c.eval(q) * monomial_eval(mu, x))
            .fold(Scalar::zero(), |a, b| a + b)
    }
}

/// `m_µ(x)`: sum of `x^α` over distinct rearrangements `α` of µ padded with zeros.
pub fn monomial_eval(mu: &Partition, x: &PointSet) -> Scalar {
    let n = x.len();
    if mu.length() > n {
        return Scalar::zero();
    }
    let mut exps: Vec<usize> = (0..n).map(|i| mu.part(i)).collect();
    exps.sort_unstable();
    let mut total = Scalar::zero();
    for_each_distinct_permutation(&mut exps, &mut |alpha| {
        total += alpha.iter().zip(x.iter()).fold(Scalar::one(), |acc, (&k, xi)| acc * powi(xi, k as i64));
    });
    total
}

/// Visits each distinct permutation of a sorted multiset once.
pub(crate) fn for_each_distinct_permutation(items: &mut [usize], f: &mut impl FnMut(&[usize])) {
    // lexicographic next-permutation walk starting from sorted order
    loop {
        f(items);
        let n = items.len();
        if n < 2 {
            return;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| items[i] < items[i + 1]) else {
            return;
        };
        let j = (i + 1..n).rev().find(|&j| items[j] > items[i]).expect("successor exists");
        items.swap(i, j);
        items[i + 1..].reverse();
    }
}

/// All permutations of `0..n` (as index vectors).
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut idx: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for_each_distinct_permutation(&mut idx, &mut |p| out.push(p.to_vec()));
    out
}

/// `ψ_{κ/ν}(Q)` for a horizontal strip `κ/ν`.
fn psi(kappa: &Partition, nu: &Partition) -> QPoly {
    let kc = kappa.conjugate();
    let nc = nu.conjugate();
    let theta = |j: usize| kc.part(j - 1) - nc.part(j - 1);
    let mut acc = QPoly::one();
    for j in 1..=kappa.first_part() {
        if theta(j) == 0 && theta(j + 1) == 1 {
            acc = &acc * &QPoly::one_minus_q_pow(nu.multiplicity(j));
        }
    }
    acc
}

/// Partitions `κ ⊆ λ` with `κ/ν` a horizontal strip of size `size`.
fn horizontal_strips(nu: &Partition, lambda: &Partition, size: usize) -> Vec<Partition> {
    let rows = (nu.length() + 1).min(lambda.length());
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    fn rec(i: usize, rows: usize, rem: usize, nu: &Partition, lambda: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == rows {
            if rem == 0 {
                out.push(Partition::new(cur.clone()).expect("strip stays a partition"));
            }
            return;
        }
        let lo = nu.part(i);
        let hi = if i == 0 { lambda.part(0) } else { lambda.part(i).min(nu.part(i - 1)) };
        for k in lo..=hi {
            if k - lo > rem {
                break;
            }
            cur.push(k);
            rec(i + 1, rows, rem - (k - lo), nu, lambda, cur, out);
            cur.pop();
        }
    }
    rec(0, rows, size, nu, lambda, &mut cur, &mut out);
    out
}

/// Sum over horizontal-strip chains from `nu` to `lambda` with strip sizes `content`.
fn strip_chain_sum(
    nu: &Partition,
    lambda: &Partition,
    content: &[usize],
    memo: &mut HashMap<(Partition, usize), QPoly>,
) -> QPoly {
    if content.is_empty() {
        return if nu == lambda { QPoly::one() } else { QPoly::zero() };
    }
    let key = (nu.clone(), content.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut acc = QPoly::zero();
    for kappa in horizontal_strips(nu, lambda, content[0]) {
        let rest = strip_chain_sum(&kappa, lambda, &content[1..], memo);
        if !rest.is_zero() {
            acc = &acc + &(&psi(&kappa, nu) * &rest);
        }
    }
    memo.insert(key, acc.clone());
    acc
}

fn hl_cache() -> &'static Mutex<HashMap<Partition, Arc<MonomialExpansion>>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<MonomialExpansion>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Monomial expansion of `P_λ(x; Q)` with polynomial coefficients, cached per λ.
pub fn hl_monomial_expansion(lambda: &Partition) -> Arc<MonomialExpansion> {
    if let Some(e) = hl_cache().lock().expect("cache lock").get(lambda) {
        return e.clone();
    }
    let mut coeffs = BTreeMap::new();
    for mu in partitions_of(lambda.weight()) {
        if !lambda.dominates(&mu) {
            continue;
        }
        let mut memo = HashMap::new();
        let c = strip_chain_sum(&Partition::empty(), lambda, mu.parts(), &mut memo);
        if !c.is_zero() {
            coeffs.insert(mu, c);
        }
    }
    let e = Arc::new(MonomialExpansion { weight: lambda.weight(), coeffs });
    hl_cache().lock().expect("cache lock").insert(lambda.clone(), e.clone());
    e
}

/// Monomial expansion of `s_λ`, i.e. `P_λ` at `Q = 0`; coefficients are tableau counts.
pub fn schur_monomial_expansion(lambda: &Partition) -> MonomialExpansion {
    let hl = hl_monomial_expansion(lambda);
    let zero = Scalar::zero();
    MonomialExpansion {
        weight: hl.weight,
        coeffs: hl
            .coeffs
            .iter()
            .filter_map(|(mu, c)| {
                let v = c.eval(&zero);
                (!v.is_zero()).then(|| (mu.clone(), QPoly::constant(v)))
            })
            .collect(),
    }
}

/// `v_m(q) = Π_{i=1}^m (1 + q + … + q^{i−1})`
fn v_m(m: usize, q: &Scalar) -> Scalar {
    let mut acc = Scalar::one();
    let mut geo = Scalar::zero();
    let mut pw = Scalar::one();
    for _ in 0..m {
        geo += &pw;
        pw *= q;
        acc *= &geo;
    }
    acc
}

/// Symmetrization formula; needs distinct points and `v_λ(q) ≠ 0`.
pub fn hl_symmetrization(lambda: &Partition, x: &PointSet, q: &Scalar) -> Result<Scalar> {
    x.require_distinct()?;
    let n = x.len();
    if lambda.length() > n {
        return Ok(Scalar::zero());
    }
    let mut v = v_m(n - lambda.length(), q);
    let mut i = 0;
    while i < lambda.length() {
        let j = (i..lambda.length()).find(|&j| lambda.part(j) != lambda.part(i)).unwrap_or(lambda.length());
        v *= v_m(j - i, q);
        i = j;
    }
    if v.is_zero() {
        return Err(Error::Singular("Hall-Littlewood normalization v_λ(Q) vanishes"));
    }
    let p = x.points();
    let mut total = Scalar::zero();
    for w in permutations(n) {
        let mut term = Scalar::one();
        for i in 0..n {
            term *= powi(&p[w[i]], lambda.part(i) as i64);
        }
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (&p[w[i]], &p[w[j]]);
                term *= (a - q * b) / (a - b);
            }
        }
        total += term;
    }
    Ok(total / v)
}

pub fn hl_via_monomials(lambda: &Partition, x: &PointSet, q: &Scalar) -> Scalar {
    if lambda.length() > x.len() {
        return Scalar::zero();
    }
    hl_monomial_expansion(lambda).eval(x, q)
}

/// `P_λ(x; q)`. Symmetrization when it applies, monomial expansion otherwise.
pub fn hall_littlewood_eval(lambda: &Partition, x: &PointSet, q: &Scalar) -> Scalar {
    if lambda.length() > x.len() {
        return Scalar::zero();
    }
    if x.is_distinct() && x.len() <= 6 {
        if let Ok(v) = hl_symmetrization(lambda, x, q) {
            return v;
        }
    }
    hl_via_monomials(lambda, x, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{frac, int};
    use crate::symfunc::schur_eval;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts)
    }

    #[test]
    fn two_row_expansion() {
        let e = hl_monomial_expansion(&p(&[2]));
        assert_eq!(e.coeff(&p(&[2])), QPoly::one());
        assert_eq!(e.coeff(&p(&[1, 1])), QPoly::one_minus_q_pow(1));
        let e = hl_monomial_expansion(&p(&[1, 1]));
        assert_eq!(e.coeff(&p(&[1, 1])), QPoly::one());
        assert_eq!(e.coeffs.len(), 1);
    }

    #[test]
    fn examples() {
        let (a, b) = (frac(2, 3), frac(-5, 4));
        let x = PointSet::new(vec![a.clone(), b.clone()]);
        let q = frac(1, 3);
        assert_eq!(hall_littlewood_eval(&p(&[1]), &x, &q), &a + &b);
        assert_eq!(hall_littlewood_eval(&p(&[1, 1]), &x, &q), &a * &b);
        assert_eq!(hl_symmetrization(&p(&[1, 1]), &x, &q).unwrap(), &a * &b);
        assert_eq!(hall_littlewood_eval(&p(&[2]), &x, &int(0)), &a * &a + &a * &b + &b * &b);
    }

    #[test]
    fn routes_agree() {
        let x = PointSet::new(vec![frac(1, 2), frac(-1, 3), frac(3, 5)]);
        let q = frac(2, 7);
        for d in 0..=5 {
            for lam in partitions_of(d) {
                let s = hl_symmetrization(&lam, &x, &q).unwrap();
                assert_eq!(s, hl_via_monomials(&lam, &x, &q), "λ = {lam}");
            }
        }
    }

    #[test]
    fn repeated_points_fallback() {
        let x = PointSet::new(vec![int(2), int(2)]);
        // P_(1,1) = e_2, P_(2) = m_2 + (1-q) m_11
        let q = frac(1, 4);
        assert_eq!(hall_littlewood_eval(&p(&[1, 1]), &x, &q), int(4));
        assert_eq!(hall_littlewood_eval(&p(&[2]), &x, &q), int(8) + frac(3, 4) * int(4));
    }

    #[test]
    fn q_zero_is_schur() {
        let x = PointSet::new(vec![frac(1, 2), int(3), frac(-2, 5)]);
        for lam in partitions_of(4) {
            assert_eq!(hall_littlewood_eval(&lam, &x, &int(0)), schur_eval(&lam, &x));
        }
    }

    #[test]
    fn monomials() {
        let x = PointSet::new(vec![int(1), int(2), int(3)]);
        assert_eq!(monomial_eval(&p(&[1]), &x), int(6));
        assert_eq!(monomial_eval(&p(&[1, 1]), &x), int(11));
        assert_eq!(monomial_eval(&p(&[2, 1]), &x), int(2 + 3 + 4 + 18 + 9 + 12));
        assert_eq!(monomial_eval(&p(&[1, 1, 1, 1]), &x), int(0));
        assert_eq!(permutations(3).len(), 6);
    }
}
