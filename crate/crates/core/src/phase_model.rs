//! Phase-model scalar products, correlation functions and tau-function
//! coefficients, all in exact arithmetic.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::linalg::det;
use crate::algebra::scalar::{self, powi, Scalar};
use crate::error::{Error, Result};
use crate::miwa::{schur_in_miwa, MiwaCoords};
use crate::partitions::{enumerate_in_box, hook, occupation_from_partition, partitions_up_to, Partition};
use crate::symfunc::{h_values, jacobi_trudi, schur_eval, skew_schur_eval, vandermonde, PointSet};

/// `N` particles on sites `0..=M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoxSpec {
    pub n: usize,
    pub m: usize,
}

impl BoxSpec {
    pub fn new(n: usize, m: usize) -> Self {
        BoxSpec { n, m }
    }

    pub fn partitions(&self) -> Vec<Partition> {
        enumerate_in_box(self.n, self.m)
    }
}

macro_rules! string_enum {
    ($name:ident { $($var:ident => $s:literal),+ $(,)? }) => {
        impl std::str::FromStr for $name {
            type Err = $crate::error::Error;
            fn from_str(s: &str) -> $crate::error::Result<Self> {
                match s {
                    $($s => Ok($name::$var),)+
                    _ => Err($crate::error::Error::Parse { input: s.to_string(), reason: format!("expected one of {}", [$($s),+].join(", ")) }),
                }
            }
        }
        impl $name {
            pub fn as_str(&self) -> &'static str {
                match self { $($name::$var => $s,)+ }
            }
        }
    };
}
pub(crate) use string_enum;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarMode {
    Det,
    SchurSum,
}
string_enum!(ScalarMode { Det => "det", SchurSum => "schur_sum" });

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorrelationMode {
    Det,
    SkewSum,
}
string_enum!(CorrelationMode { Det => "det", SkewSum => "skew_sum" });

/// Sign of the `t'` exponent in the constant-term integrand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignConvention {
    Plus,
    Minus,
}
string_enum!(SignConvention { Plus => "plus", Minus => "minus" });

/// `Σ_{k=1}^{M+N} (zw)^{k−1}`, always as the polynomial sum.
pub fn h_entry(z: &Scalar, w: &Scalar, b: BoxSpec) -> Scalar {
    let zw = z * w;
    let mut acc = Scalar::zero();
    let mut pw = Scalar::one();
    for _ in 0..b.m + b.n {
        acc += &pw;
        pw *= &zw;
    }
    acc
}

pub fn h_matrix(x: &PointSet, y: &PointSet, b: BoxSpec) -> Vec<Vec<Scalar>> {
    x.iter().map(|xi| y.iter().map(|yk| h_entry(xi, yk, b)).collect()).collect()
}

/// `Σ_{λ ⊆ [N,M]} s_λ(x) s_λ(y)`; no restriction on the points.
pub fn schur_sum(x: &PointSet, y: &PointSet, b: BoxSpec) -> Scalar {
    b.partitions().iter().map(|l| schur_eval(l, x) * schur_eval(l, y)).fold(Scalar::zero(), |a, c| a + c)
}

pub fn scalar_product(x: &PointSet, y: &PointSet, b: BoxSpec, mode: ScalarMode) -> Result<Scalar> {
    x.require_len("x", b.n)?;
    y.require_len("y", b.n)?;
    match mode {
        ScalarMode::SchurSum => Ok(schur_sum(x, y, b)),
        ScalarMode::Det => {
            x.require_distinct()?;
            y.require_distinct()?;
            Ok(det(&h_matrix(x, y, b)) / (vandermonde(x) * vandermonde(y)))
        }
    }
}

fn require_m(m: usize, b: BoxSpec) -> Result<()> {
    if m > b.m {
        return Err(Error::OutOfRange { name: "m", value: m as i64, min: 0, max: b.m as i64 });
    }
    Ok(())
}

/// `⟨0| Π_{j≤N} ℂ(x_j) Π_{k<N} 𝔹(y_k) φ_m† |0⟩` with `|x| = N`, `|y| = N − 1`.
///
/// `Det` reads the value off the `w^m` coefficient of the determinant formula
/// for `I(N, M | x, (y, w))`:
/// `(Π_t y_t^{-1}) Σ_{n ≤ m} h_{m−n}(1/y) det Q^{(n)} / (Δ(x)Δ(y))`, where
/// `Q^{(n)}` has the columns `H(x_j, y_k)` followed by `x_j^n`.
/// `SkewSum` is `Σ_{µ ⊆ [N,M]} s_{µ/(m)}(y) s_µ(x)`.
pub fn correlation_am(x: &PointSet, y: &PointSet, m: usize, b: BoxSpec, mode: CorrelationMode) -> Result<Scalar> {
    if b.n == 0 {
        return Err(Error::OutOfRange { name: "N", value: 0, min: 1, max: i64::MAX });
    }
    x.require_len("x", b.n)?;
    y.require_len("y", b.n - 1)?;
    require_m(m, b)?;
    match mode {
        CorrelationMode::SkewSum => {
            let row = Partition::row(m);
            Ok(b.partitions()
                .iter()
                .map(|mu| skew_schur_eval(mu, &row, y) * schur_eval(mu, x))
                .fold(Scalar::zero(), |a, c| a + c))
        }
        CorrelationMode::Det => {
            x.require_distinct()?;
            y.require_distinct()?;
            if y.iter().any(Zero::is_zero) {
                return Err(Error::ZeroParameter);
            }
            let hinv = h_values(&y.powered(-1), m);
            let mut total = Scalar::zero();
            for n in 0..=m {
                let q: Vec<Vec<Scalar>> = x
                    .iter()
                    .map(|xj| {
                        let mut row: Vec<Scalar> = y.iter().map(|yk| h_entry(xj, yk, b)).collect();
                        row.push(powi(xj, n as i64));
                        row
                    })
                    .collect();
                total += &hinv[m - n] * det(&q);
            }
            let prod_y = y.iter().fold(Scalar::one(), |a, c| a * c);
            Ok(total / (prod_y * vandermonde(x) * vandermonde(y)))
        }
    }
}

/// The prefactored determinant expression exactly as stated in the literature,
/// with `x = u²`, `y = v²` (`|u| = |v| = N`, the last `v` being the auxiliary
/// `y_N`). Requires `M + N − 1` even. Kept for comparison with the oracle; it is
/// not the value of the correlation function (see `correlation_am`).
pub fn correlation_am_literal(u: &PointSet, v: &PointSet, m: usize, b: BoxSpec) -> Result<Scalar> {
    let n = b.n;
    if n == 0 {
        return Err(Error::OutOfRange { name: "N", value: 0, min: 1, max: i64::MAX });
    }
    u.require_len("u", n)?;
    v.require_len("v", n)?;
    require_m(m, b)?;
    if !(b.m + n - 1).is_multiple_of(2) {
        return Err(Error::Parity(b.m + n - 1));
    }
    if u.iter().chain(v.iter()).any(Zero::is_zero) {
        return Err(Error::ZeroParameter);
    }
    let x = u.powered(2);
    let y = v.powered(2);
    x.require_distinct()?;
    y.require_distinct()?;
    let yn = &y.points()[n - 1];
    let col_exp = (b.m + n - 1) as i64 - 2 * m as i64;
    let q: Vec<Vec<Scalar>> = x
        .iter()
        .zip(u.iter())
        .map(|(xj, uj)| {
            let mut row: Vec<Scalar> = y.points()[..n - 1].iter().map(|yk| h_entry(xj, yk, b)).collect();
            row.push(powi(uj, col_exp));
            row
        })
        .collect();
    let sign = if (n - 1).is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
    let mut pref = sign / powi(&v.points()[n - 1], (n - 1) as i64);
    for uj in u.iter() {
        pref *= powi(uj, b.m as i64);
    }
    for (vk, yk) in v.points()[..n - 1].iter().zip(&y.points()[..n - 1]) {
        pref *= powi(vk, b.m as i64);
        pref *= (yn - yk) / yk;
    }
    Ok(pref * det(&q) / (vandermonde(&x) * vandermonde(&y)))
}

/// `Σ_{µ ⊆ [min(|x|,|y|), M]} s_{µ/λ1}(x) s_{µ/λ2}(y)`
pub fn correlation_skew(l1: &Partition, l2: &Partition, x: &PointSet, y: &PointSet, b: BoxSpec) -> Scalar {
    enumerate_in_box(x.len().min(y.len()), b.m)
        .iter()
        .map(|mu| skew_schur_eval(mu, l1, x) * skew_schur_eval(mu, l2, y))
        .fold(Scalar::zero(), |a, c| a + c)
}

/// Both sides of the finite-size factorization
/// `A_{λ1λ2} = I(min(N,N'), M) · Σ_ν s_{λ1/ν}(x) s_{λ2/ν}(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationReport {
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl FactorizationReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn factorization_experiment(l1: &Partition, l2: &Partition, x: &PointSet, y: &PointSet, b: BoxSpec) -> FactorizationReport {
    let lhs = correlation_skew(l1, l2, x, y, b);
    let k = x.len().min(y.len());
    let i = enumerate_in_box(k, b.m)
        .iter()
        .map(|mu| schur_eval(mu, x) * schur_eval(mu, y))
        .fold(Scalar::zero(), |a, c| a + c);
    let nus = partitions_up_to(l1.weight().min(l2.weight()), l1.length().max(l2.length()));
    let skew = nus
        .iter()
        .map(|nu| skew_schur_eval(l1, nu, x) * skew_schur_eval(l2, nu, y))
        .fold(Scalar::zero(), |a, c| a + c);
    FactorizationReport { lhs, rhs: i * skew }
}

/// `Σ_{λ ⊆ [N,M]} s_{λ/ν}(x)`
pub fn yankee_correlation(nu: &Partition, x: &PointSet, b: BoxSpec) -> Result<Scalar> {
    if !nu.fits_in_box(b.n, b.m) {
        return Err(Error::OutsideBox { partition: nu.to_string(), n: b.n, m: b.m });
    }
    Ok(b.partitions().iter().map(|l| skew_schur_eval(l, nu, x)).fold(Scalar::zero(), |a, c| a + c))
}

/// `Σ_{µ ⊆ [N,M]} (Π_i w_i^{n_i(µ)}) s_µ(x) s_µ(y)` with `n_0 = N − ℓ(µ)`.
pub fn hypergeometric_tau(x: &PointSet, y: &PointSet, b: BoxSpec, w: &[Scalar]) -> Result<Scalar> {
    x.require_len("x", b.n)?;
    y.require_len("y", b.n)?;
    if w.len() != b.m + 1 {
        return Err(Error::PointCount { what: "site weights", expected: b.m + 1, got: w.len() });
    }
    let mut total = Scalar::zero();
    for mu in b.partitions() {
        let occ = occupation_from_partition(&mu, b.n, b.m)?;
        let c = occ.0.iter().zip(w).fold(Scalar::one(), |a, (&k, wi)| a * powi(wi, k as i64));
        if !c.is_zero() {
            total += c * schur_eval(&mu, x) * schur_eval(&mu, y);
        }
    }
    Ok(total)
}

/// Constant term in `z_1..z_n` of
/// `(1/n!) Π_ℓ exp(ξ(t, z_ℓ) ± ξ(t', 1/z_ℓ)) Δ(z)Δ(1/z)`,
/// keeping the contributions of total `t`-degree at most `cutoff`.
pub fn matrix_integral_constant_term(
    n: usize,
    t: &MiwaCoords,
    tprime: &MiwaCoords,
    cutoff: usize,
    sign: SignConvention,
) -> Result<Scalar> {
    if !(1..=2).contains(&n) {
        return Err(Error::Unsupported(format!("constant-term extraction for n = {n} (only 1 and 2)")));
    }
    let h = t.h_values(cutoff);
    let tp = match sign {
        SignConvention::Plus => tprime.clone(),
        SignConvention::Minus => tprime.scale(&-Scalar::one()),
    };
    let hp = tp.h_values(cutoff + 1);
    // g(d)[a]: coefficient of z^d in one factor, from t-degree a (so t'-degree a − d)
    let g = |d: i64| -> Vec<Scalar> {
        (0..=cutoff)
            .map(|a| {
                let bdeg = a as i64 - d;
                if bdeg < 0 {
                    Scalar::zero()
                } else {
                    &h[a] * &hp[bdeg as usize]
                }
            })
            .collect()
    };
    let truncated_sum = |seq: &[Scalar]| seq.iter().fold(Scalar::zero(), |a, c| a + c);
    let conv = |a: &[Scalar], b: &[Scalar]| -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..=cutoff {
            for j in 0..=cutoff - i {
                acc += &a[i] * &b[j];
            }
        }
        acc
    };
    Ok(match n {
        1 => truncated_sum(&g(0)),
        _ => {
            // Δ(z)Δ(1/z) = 2 − z1/z2 − z2/z1
            let (g0, gp, gm) = (g(0), g(1), g(-1));
            (scalar::int(2) * conv(&g0, &g0) - conv(&gm, &gp) - conv(&gp, &gm)) / scalar::int(2)
        }
    })
}

/// `Σ_{ℓ(λ) ≤ n, |λ| ≤ cutoff} s_λ(t) s_λ(t')`
pub fn miwa_cauchy_sum(n: usize, t: &MiwaCoords, tprime: &MiwaCoords, cutoff: usize) -> Result<Scalar> {
    let t = t.padded(cutoff);
    let tp = tprime.padded(cutoff);
    let mut acc = Scalar::zero();
    for lam in partitions_up_to(cutoff, n) {
        acc += schur_in_miwa(&lam, &t)? * schur_in_miwa(&lam, &tp)?;
    }
    Ok(acc)
}

/// `c_λ(y) = det(h_{λ_i − i + j}(y))`
pub fn plucker_coefficient(lambda: &Partition, y: &PointSet) -> Scalar {
    let h = h_values(y, lambda.first_part() + lambda.length());
    jacobi_trudi(lambda, &Partition::empty(), |k| h[k].clone())
}

/// Whether `det_{ij} c_{(a_i|b_j)}(y) = c_λ(y)` over the Frobenius coordinates of λ.
pub fn giambelli_check(y: &PointSet, lambda: &Partition) -> bool {
    let f = lambda.frobenius();
    let m: Vec<Vec<Scalar>> = f
        .pairs
        .iter()
        .map(|&(a, _)| f.pairs.iter().map(|&(_, bj)| plucker_coefficient(&hook(a, bj), y)).collect())
        .collect();
    det(&m) == plucker_coefficient(lambda, y)
}

/// Whether `Δ(q·y)/Δ(y) = q^{N(N−1)/2}`; needs distinct `y`.
pub fn vandermonde_scaling_check(y: &PointSet, q: &Scalar) -> Result<bool> {
    y.require_distinct()?;
    let n = y.len() as i64;
    Ok(vandermonde(&y.scaled(q)) / vandermonde(y) == powi(q, n * (n - 1) / 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{frac, int};

    fn pts(v: &[(i64, i64)]) -> PointSet {
        PointSet::new(v.iter().map(|&(p, q)| frac(p, q)).collect())
    }

    #[test]
    fn h_entry_examples() {
        let b = BoxSpec::new(2, 3);
        assert_eq!(h_entry(&int(0), &int(5), b), int(1));
        assert_eq!(h_entry(&int(2), &frac(1, 2), b), int(5));
        let (a, c) = (frac(1, 3), frac(2, 5));
        let ab = &a * &c;
        assert_eq!(h_entry(&a, &c, BoxSpec::new(1, 2)), int(1) + &ab + &ab * &ab);
    }

    #[test]
    fn scalar_examples() {
        let e = PointSet::empty();
        assert_eq!(scalar_product(&e, &e, BoxSpec::new(0, 3), ScalarMode::Det).unwrap(), int(1));
        assert_eq!(scalar_product(&e, &e, BoxSpec::new(0, 3), ScalarMode::SchurSum).unwrap(), int(1));
        let x = pts(&[(1, 2)]);
        let y = pts(&[(3, 7)]);
        let b = BoxSpec::new(1, 3);
        let xy = frac(3, 14);
        let expected = (0..=3).map(|k| powi(&xy, k)).fold(int(0), |a, c| a + c);
        assert_eq!(scalar_product(&x, &y, b, ScalarMode::Det).unwrap(), expected);
        assert_eq!(scalar_product(&x, &y, b, ScalarMode::SchurSum).unwrap(), expected);
        let x = pts(&[(1, 2), (1, 3)]);
        let y = pts(&[(1, 5), (1, 7)]);
        let b = BoxSpec::new(2, 2);
        assert_eq!(scalar_product(&x, &y, b, ScalarMode::Det).unwrap(), scalar_product(&x, &y, b, ScalarMode::SchurSum).unwrap());
    }

    #[test]
    fn det_mode_rejects_repeats() {
        let x = pts(&[(1, 2), (1, 2)]);
        let y = pts(&[(1, 5), (1, 7)]);
        assert!(matches!(scalar_product(&x, &y, BoxSpec::new(2, 2), ScalarMode::Det), Err(Error::RepeatedPoint(_))));
        assert!(scalar_product(&x, &y, BoxSpec::new(2, 2), ScalarMode::SchurSum).is_ok());
        assert!(matches!(scalar_product(&x, &y, BoxSpec::new(3, 2), ScalarMode::SchurSum), Err(Error::PointCount { .. })));
    }

    #[test]
    fn correlation_modes_agree() {
        let x = pts(&[(1, 2), (-1, 3)]);
        let y = pts(&[(2, 5)]);
        let b = BoxSpec::new(2, 3);
        for m in 0..=3 {
            let d = correlation_am(&x, &y, m, b, CorrelationMode::Det).unwrap();
            let s = correlation_am(&x, &y, m, b, CorrelationMode::SkewSum).unwrap();
            assert_eq!(d, s, "m = {m}");
        }
        assert!(correlation_am(&x, &y, 4, b, CorrelationMode::Det).is_err());
    }

    #[test]
    fn correlation_single_particle() {
        // y empty: only µ = (m) contributes, giving h_m(x)
        let x = pts(&[(2, 3)]);
        let b = BoxSpec::new(1, 4);
        let v = correlation_am(&x, &PointSet::empty(), 2, b, CorrelationMode::SkewSum).unwrap();
        assert_eq!(v, frac(4, 9));
        assert_eq!(correlation_am(&x, &PointSet::empty(), 2, b, CorrelationMode::Det).unwrap(), v);
    }

    #[test]
    fn literal_form_parity() {
        let u = pts(&[(1, 2), (1, 3)]);
        let v = pts(&[(1, 5), (2, 7)]);
        assert!(matches!(correlation_am_literal(&u, &v, 1, BoxSpec::new(2, 2)), Err(Error::Parity(3))));
        assert!(correlation_am_literal(&u, &v, 1, BoxSpec::new(2, 3)).is_ok());
    }

    #[test]
    fn yankee_examples() {
        let a = frac(2, 3);
        let b = BoxSpec::new(1, 3);
        let expected = (0..=3).map(|k| powi(&a, k)).fold(int(0), |s, c| s + c);
        assert_eq!(yankee_correlation(&Partition::empty(), &PointSet::new(vec![a]), b).unwrap(), expected);
        let full = Partition::from_parts(&[3, 3]);
        assert_eq!(yankee_correlation(&full, &pts(&[(1, 2), (1, 5)]), BoxSpec::new(2, 3)).unwrap(), int(1));
        assert_eq!(yankee_correlation(&Partition::from_parts(&[1]), &PointSet::empty(), BoxSpec::new(2, 3)).unwrap(), int(1));
    }

    #[test]
    fn hypergeometric_examples() {
        let x = pts(&[(1, 2), (1, 3)]);
        let y = pts(&[(1, 5), (-1, 7)]);
        let b = BoxSpec::new(2, 2);
        let ones = vec![int(1); 3];
        assert_eq!(hypergeometric_tau(&x, &y, b, &ones).unwrap(), schur_sum(&x, &y, b));
        let (x1, y1) = (frac(2, 3), frac(3, 4));
        let c = frac(5, 2);
        let v = hypergeometric_tau(&PointSet::new(vec![x1.clone()]), &PointSet::new(vec![y1.clone()]), BoxSpec::new(1, 1), &[int(1), c.clone()]).unwrap();
        assert_eq!(v, int(1) + c * x1 * y1);
        let killed = hypergeometric_tau(&x, &y, b, &[int(0), int(1), int(1)]).unwrap();
        let full_length: Scalar = b
            .partitions()
            .iter()
            .filter(|l| l.length() == 2)
            .map(|l| schur_eval(l, &x) * schur_eval(l, &y))
            .fold(int(0), |a, c| a + c);
        assert_eq!(killed, full_length);
    }

    #[test]
    fn matrix_integral_single() {
        let z = MiwaCoords::zero(3);
        assert_eq!(matrix_integral_constant_term(1, &z, &z, 3, SignConvention::Plus).unwrap(), int(1));
        let t = MiwaCoords::new(vec![frac(1, 2), frac(-1, 3)]);
        let tp = MiwaCoords::new(vec![frac(2, 5), frac(1, 7)]);
        let ct = matrix_integral_constant_term(1, &t, &tp, 4, SignConvention::Plus).unwrap();
        let h = t.h_values(4);
        let hp = tp.h_values(4);
        assert_eq!(ct, (0..=4).map(|k| &h[k] * &hp[k]).fold(int(0), |a, c| a + c));
        assert!(matrix_integral_constant_term(3, &t, &tp, 4, SignConvention::Plus).is_err());
    }

    #[test]
    fn matrix_integral_two() {
        let t = MiwaCoords::new(vec![frac(1, 2), frac(-1, 3), frac(1, 4)]);
        let tp = MiwaCoords::new(vec![frac(2, 5), frac(1, 7)]);
        let ct = matrix_integral_constant_term(2, &t, &tp, 4, SignConvention::Plus).unwrap();
        assert_eq!(ct, miwa_cauchy_sum(2, &t, &tp, 4).unwrap());
        let ct_minus = matrix_integral_constant_term(2, &t, &tp, 4, SignConvention::Minus).unwrap();
        assert_ne!(ct_minus, ct);
    }

    #[test]
    fn giambelli_examples() {
        let y = pts(&[(1, 2), (-2, 3), (3, 5)]);
        assert!(giambelli_check(&y, &hook(2, 1)));
        assert!(giambelli_check(&y, &Partition::from_parts(&[2, 2])));
        assert!(giambelli_check(&y, &Partition::from_parts(&[3, 3, 1])));
        assert!(giambelli_check(&y, &Partition::empty()));
    }

    #[test]
    fn vandermonde_scaling() {
        let y = pts(&[(1, 2), (-2, 3), (3, 5), (7, 4)]);
        assert!(vandermonde_scaling_check(&y, &frac(1, 3)).unwrap());
        assert!(vandermonde_scaling_check(&y, &int(0)).unwrap());
    }
}
