//! q-boson scalar products in four equivalent-in-the-limit forms, and the
//! Kostka coefficient matrix of the big-Schur expansion.

use num_traits::{One, Zero};

use crate::algebra::linalg::det_poly;
use crate::algebra::scalar::{powi, Scalar};
use crate::algebra::QPoly;
use crate::error::{Error, Result};
use crate::miwa::{schur_in_miwa, MiwaCoords};
use crate::partitions::{b_lambda, partitions_up_to, q_factorial, Partition};
use crate::phase_model::{string_enum, BoxSpec};
use crate::symfunc::polys::{Alphabet, XYSpace};
use crate::symfunc::{big_schur_eval, hall_littlewood_eval, kostka_tables, schur_eval, vandermonde, PointSet};

pub use crate::symfunc::c_tilde_matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QBosonSpec {
    pub b: BoxSpec,
    pub q: Scalar,
}

impl QBosonSpec {
    pub fn new(n: usize, m: usize, q: Scalar) -> Self {
        QBosonSpec { b: BoxSpec::new(n, m), q }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QScalarMode {
    HlSum,
    DetQuotient,
    BigSchur,
    TwistedSchur,
}
string_enum!(QScalarMode {
    HlSum => "hl_sum",
    DetQuotient => "det_quotient",
    BigSchur => "big_schur",
    TwistedSchur => "twisted_schur",
});

impl QScalarMode {
    pub const ALL: [QScalarMode; 4] = [QScalarMode::HlSum, QScalarMode::DetQuotient, QScalarMode::BigSchur, QScalarMode::TwistedSchur];
}

fn require_sizes(x: &PointSet, y: &PointSet, spec: &QBosonSpec) -> Result<()> {
    x.require_len("x", spec.b.n)?;
    y.require_len("y", spec.b.n)
}

/// `I(s) = Σ_{λ ⊆ box} s^{|λ|} s_λ(x) s_λ(y)` as a polynomial in `s`, computed
/// from `det H(s·x, y) / (s^{N(N−1)/2} Δ(x)Δ(y))`.
pub fn graded_phase_scalar(x: &PointSet, y: &PointSet, b: BoxSpec) -> Result<QPoly> {
    x.require_distinct()?;
    y.require_distinct()?;
    let len = b.m + b.n;
    let m: Vec<Vec<QPoly>> = x
        .iter()
        .map(|xj| {
            y.iter()
                .map(|yk| {
                    let c = xj * yk;
                    QPoly::new((0..len).map(|k| powi(&c, k as i64)).collect())
                })
                .collect()
        })
        .collect();
    let d = det_poly(&m);
    let shift = b.n * b.n.saturating_sub(1) / 2;
    let d = d.shift_down(shift).ok_or(Error::Singular("determinant not divisible by the expected power of s"))?;
    let norm = vandermonde(x) * vandermonde(y);
    Ok(d.scale(&norm.recip()))
}

/// Power-series coefficients of `a(s)/b(s)` through `s^deg`; needs `b(0) ≠ 0`.
fn series_quotient(a: &QPoly, b: &QPoly, deg: usize) -> Result<Vec<Scalar>> {
    let b0 = b.coeff(0);
    if b0.is_zero() {
        return Err(Error::Singular("denominator series has zero constant term"));
    }
    let mut out: Vec<Scalar> = Vec::with_capacity(deg + 1);
    for k in 0..=deg {
        let mut acc = a.coeff(k);
        for i in 1..=k {
            acc -= b.coeff(i) * &out[k - i];
        }
        out.push(acc / &b0);
    }
    Ok(out)
}

fn sum_over_box(spec: &QBosonSpec, term: impl Fn(&Partition) -> Result<Scalar>) -> Result<Scalar> {
    let mut acc = Scalar::zero();
    for lam in spec.b.partitions() {
        acc += term(&lam)?;
    }
    Ok(acc)
}

fn twisted_times(y: &PointSet, spec: &QBosonSpec) -> MiwaCoords {
    MiwaCoords::from_points(y, (spec.b.n * spec.b.m).max(1)).twist(&spec.q)
}

fn mode_term(x: &PointSet, y: &PointSet, spec: &QBosonSpec, mode: QScalarMode, t: Option<&MiwaCoords>, lam: &Partition) -> Result<Scalar> {
    let q = &spec.q;
    Ok(match mode {
        QScalarMode::HlSum => {
            let b = b_lambda(lam).eval(q);
            if b.is_zero() {
                Scalar::zero()
            } else {
                b * hall_littlewood_eval(lam, x, q) * hall_littlewood_eval(lam, y, q)
            }
        }
        QScalarMode::BigSchur => big_schur_eval(lam, y, q) * schur_eval(lam, x),
        QScalarMode::TwistedSchur => schur_in_miwa(lam, t.expect("times supplied"))? * schur_eval(lam, x),
        QScalarMode::DetQuotient => unreachable!("not a partition sum"),
    })
}

/// The scalar product in the requested representation.
///
/// * `HlSum`: `Σ_{λ ⊆ box} b_λ(Q) P_λ(x;Q) P_λ(y;Q)`
/// * `DetQuotient`: `Q^{N(N−1)/2} det H(x,y) / det H(x,Q·y)`, evaluated as `I(1)/I(Q)`
///   so that `Q = 0` is covered
/// * `BigSchur`: `Σ_{λ ⊆ box} S_λ(y;Q) s_λ(x)`
/// * `TwistedSchur`: `Σ_{λ ⊆ box} s_λ(T) s_λ(x)` with `T_n = (1 − Q^n) t_n(y)`
pub fn scalar_product_q(x: &PointSet, y: &PointSet, spec: &QBosonSpec, mode: QScalarMode) -> Result<Scalar> {
    require_sizes(x, y, spec)?;
    match mode {
        QScalarMode::DetQuotient => {
            let i = graded_phase_scalar(x, y, spec.b)?;
            let den = i.eval(&spec.q);
            if den.is_zero() {
                return Err(Error::Singular("det H(x, Q·y) vanishes"));
            }
            Ok(i.eval(&Scalar::one()) / den)
        }
        QScalarMode::TwistedSchur => {
            let t = twisted_times(y, spec);
            sum_over_box(spec, |lam| mode_term(x, y, spec, mode, Some(&t), lam))
        }
        _ => sum_over_box(spec, |lam| mode_term(x, y, spec, mode, None, lam)),
    }
}

/// Components of the scalar product by degree in `x` (equivalently in `y`),
/// degrees `0..=max_deg`. For the partition-sum modes this groups terms by
/// `|λ|`; for `DetQuotient` it is the series of `I(s)/I(Q s)`.
pub fn graded_components(x: &PointSet, y: &PointSet, spec: &QBosonSpec, mode: QScalarMode, max_deg: usize) -> Result<Vec<Scalar>> {
    require_sizes(x, y, spec)?;
    if mode == QScalarMode::DetQuotient {
        let i = graded_phase_scalar(x, y, spec.b)?;
        return series_quotient(&i, &i.rescale_variable(&spec.q), max_deg);
    }
    let t = (mode == QScalarMode::TwistedSchur).then(|| twisted_times(y, spec));
    let mut out = vec![Scalar::zero(); max_deg + 1];
    for lam in spec.b.partitions() {
        if lam.weight() <= max_deg {
            out[lam.weight()] += mode_term(x, y, spec, mode, t.as_ref(), &lam)?;
        }
    }
    Ok(out)
}

/// Degrees `≤ max_deg` at which two modes differ.
pub fn graded_disagreements(x: &PointSet, y: &PointSet, spec: &QBosonSpec, a: QScalarMode, b: QScalarMode, max_deg: usize) -> Result<Vec<usize>> {
    let ga = graded_components(x, y, spec, a, max_deg)?;
    let gb = graded_components(x, y, spec, b, max_deg)?;
    Ok((0..=max_deg).filter(|&d| ga[d] != gb[d]).collect())
}

/// `Σ_{λ ⊆ box} [N − ℓ(λ)]! b_λ(Q) P_λ(x;Q) P_λ(y;Q)`: the HL sum with the
/// extra site-0 factor carried by the occupation-basis pairing.
pub fn hl_sum_site_normalized(x: &PointSet, y: &PointSet, spec: &QBosonSpec) -> Result<Scalar> {
    require_sizes(x, y, spec)?;
    let q = &spec.q;
    sum_over_box(spec, |lam| {
        let w = (&q_factorial(spec.b.n - lam.length()) * &b_lambda(lam)).eval(q);
        Ok(if w.is_zero() { w } else { w * hall_littlewood_eval(lam, x, q) * hall_littlewood_eval(lam, y, q) })
    })
}

/// Degrees `≤ d` at which `Σ_{λ ⊆ [N,M]} b_λ P_λ(x) P_λ(y)` and
/// `Π (1 − Q x_j y_k)/(1 − x_j y_k)` differ, as series in symbolic x and y.
/// Degree means degree in x, so the series cutoff is `2d`.
pub fn hl_cauchy_window(n: usize, m: usize, q: &Scalar, d: usize) -> Result<Vec<u32>> {
    let sp = XYSpace::new(n, 2 * d as u32);
    let mut sum = sp.zero();
    for lam in partitions_up_to(d, n) {
        if lam.first_part() > m {
            continue;
        }
        let b = b_lambda(&lam).eval(q);
        if b.is_zero() {
            continue;
        }
        let term = sp.hall_littlewood(&lam, q, Alphabet::X).mul(&sp.hall_littlewood(&lam, q, Alphabet::Y))?;
        sum = sum.add(&term.scale(&b))?;
    }
    let kernel = sp.cauchy_kernel(q);
    Ok(sum.differing_degrees(&kernel)?.into_iter().map(|k| k / 2).collect())
}

/// Whether `S_µ(y;q) = Σ_{|λ| = |µ|} c̃_{µλ}(q) s_λ(y)` on the given points.
pub fn big_schur_coeff_check(mu: &Partition, y: &PointSet, q: &Scalar) -> bool {
    let d = mu.weight();
    let t = kostka_tables(d);
    let c = c_tilde_matrix(d);
    let Some(i) = t.index_of(mu) else { return false };
    let rhs = t
        .order
        .iter()
        .enumerate()
        .map(|(j, lam)| c[i][j].eval(q) * schur_eval(lam, y))
        .fold(Scalar::zero(), |a, b| a + b);
    big_schur_eval(mu, y, q) == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{frac, int};
    use crate::phase_model::{scalar_product, ScalarMode};

    fn pts(v: &[(i64, i64)]) -> PointSet {
        PointSet::new(v.iter().map(|&(p, q)| frac(p, q)).collect())
    }

    #[test]
    fn q_zero_reduces_to_phase_model() {
        let x = pts(&[(1, 2), (-1, 3)]);
        let y = pts(&[(2, 5), (1, 7)]);
        let spec = QBosonSpec::new(2, 2, int(0));
        let phase = scalar_product(&x, &y, spec.b, ScalarMode::SchurSum).unwrap();
        for mode in QScalarMode::ALL {
            assert_eq!(scalar_product_q(&x, &y, &spec, mode).unwrap(), phase, "{}", mode.as_str());
        }
    }

    #[test]
    fn single_particle_hl_sum() {
        let (a, b) = (frac(2, 3), frac(-3, 5));
        let q = frac(1, 4);
        let spec = QBosonSpec::new(1, 2, q.clone());
        let v = scalar_product_q(&PointSet::new(vec![a.clone()]), &PointSet::new(vec![b.clone()]), &spec, QScalarMode::HlSum).unwrap();
        let ab = &a * &b;
        assert_eq!(v, int(1) + (int(1) - &q) * (&ab + &ab * &ab));
    }

    #[test]
    fn graded_window() {
        let x = pts(&[(1, 2), (-1, 3)]);
        let y = pts(&[(2, 5), (1, 7)]);
        let spec = QBosonSpec::new(2, 2, frac(1, 3));
        for mode in [QScalarMode::DetQuotient, QScalarMode::BigSchur, QScalarMode::TwistedSchur] {
            assert!(graded_disagreements(&x, &y, &spec, QScalarMode::HlSum, mode, 2).unwrap().is_empty(), "{}", mode.as_str());
        }
        assert_eq!(scalar_product_q(&x, &y, &spec, QScalarMode::BigSchur).unwrap(), scalar_product_q(&x, &y, &spec, QScalarMode::TwistedSchur).unwrap());
    }

    #[test]
    fn q_one_limit() {
        let x = pts(&[(1, 2), (-1, 3)]);
        let y = pts(&[(2, 5), (1, 7)]);
        let spec = QBosonSpec::new(2, 3, int(1));
        assert_eq!(scalar_product_q(&x, &y, &spec, QScalarMode::HlSum).unwrap(), int(1));
    }

    #[test]
    fn cauchy_window_small() {
        assert!(hl_cauchy_window(2, 3, &frac(1, 3), 3).unwrap().is_empty());
        // past the box the truncated sum falls short of the kernel
        assert_eq!(hl_cauchy_window(1, 1, &frac(1, 3), 2).unwrap(), vec![2]);
    }

    #[test]
    fn coefficient_checks() {
        let y = pts(&[(1, 2), (-1, 3), (2, 5)]);
        let q = frac(2, 7);
        assert!(big_schur_coeff_check(&Partition::empty(), &y, &q));
        assert!(big_schur_coeff_check(&Partition::from_parts(&[1]), &y, &q));
        assert!(big_schur_coeff_check(&Partition::from_parts(&[2, 1]), &y, &q));
        assert!(big_schur_coeff_check(&Partition::from_parts(&[2, 2]), &y, &q));
    }
}
