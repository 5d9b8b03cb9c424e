//! Floating-point solutions of the on-shell Bethe equations.
//!
//! Phase chain: `y_i^{N+M} = (−1)^{N−1} Π_{j≠i} y_j`.
//! q-boson chain: `y_i^{M+1} = Π_{j≠i} (Q y_i − y_j)/(y_i − Q y_j)`, which reduces
//! to the phase equations at `Q = 0`.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::ModelKind;

pub const NEWTON_TOL: f64 = 1e-13;
pub const MAX_NEWTON_ITERS: usize = 60;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BetheRoots {
    #[serde(serialize_with = "ser_roots")]
    pub roots: Vec<Complex64>,
    pub residual: f64,
}

fn ser_roots<S: serde::Serializer>(roots: &[Complex64], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(roots.len()))?;
    for r in roots {
        seq.serialize_element(&[r.re, r.im])?;
    }
    seq.end()
}

impl BetheRoots {
    fn sorted(mut roots: Vec<Complex64>, residual: f64) -> Self {
        roots.sort_by(|a, b| a.arg().total_cmp(&b.arg()));
        BetheRoots { roots, residual }
    }
}

/// Per-equation differences `LHS_i − RHS_i`.
fn equations(kind: ModelKind, m: usize, q: f64, y: &[Complex64]) -> Vec<Complex64> {
    let n = y.len();
    (0..n)
        .map(|i| match kind {
            ModelKind::Phase => {
                let sign = if (n - 1).is_multiple_of(2) { 1.0 } else { -1.0 };
                let rhs: Complex64 = (0..n).filter(|&j| j != i).map(|j| y[j]).product();
                y[i].powu((n + m) as u32) - rhs * sign
            }
            ModelKind::QBoson => {
                let rhs: Complex64 = (0..n).filter(|&j| j != i).map(|j| (q * y[i] - y[j]) / (y[i] - q * y[j])).product();
                y[i].powu((m + 1) as u32) - rhs
            }
        })
        .collect()
}

/// Polynomial form used by Newton: `y_i^{M+1} Π(y_i − Q y_j) − Π(Q y_i − y_j)`.
fn poly_system(m: usize, q: f64, y: &[Complex64]) -> Vec<Complex64> {
    let n = y.len();
    (0..n)
        .map(|i| {
            let others = || (0..n).filter(move |&j| j != i);
            let den: Complex64 = others().map(|j| y[i] - q * y[j]).product();
            let num: Complex64 = others().map(|j| q * y[i] - y[j]).product();
            y[i].powu((m + 1) as u32) * den - num
        })
        .collect()
}

fn poly_jacobian(m: usize, q: f64, y: &[Complex64]) -> DMatrix<Complex64> {
    let n = y.len();
    DMatrix::from_fn(n, n, |i, k| {
        let prod_except = |f: &dyn Fn(usize) -> Complex64, skip: Option<usize>| -> Complex64 {
            (0..n).filter(|&j| j != i && Some(j) != skip).map(f).product()
        };
        let den_f = |j: usize| y[i] - q * y[j];
        let num_f = |j: usize| q * y[i] - y[j];
        if i == k {
            let pw = y[i].powu((m + 1) as u32);
            let dpw = y[i].powu(m as u32) * (m as f64 + 1.0);
            let den = prod_except(&den_f, None);
            let dden: Complex64 = (0..n).filter(|&j| j != i).map(|j| prod_except(&den_f, Some(j))).sum();
            let dnum: Complex64 = (0..n).filter(|&j| j != i).map(|j| prod_except(&num_f, Some(j)) * q).sum();
            dpw * den + pw * dden - dnum
        } else {
            let pw = y[i].powu((m + 1) as u32);
            pw * prod_except(&den_f, Some(k)) * (-q) + prod_except(&num_f, Some(k))
        }
    })
}

/// `max_i |LHS_i − RHS_i|`
pub fn residual(kind: ModelKind, m: usize, q: f64, roots: &[Complex64]) -> f64 {
    equations(kind, m, q, roots).iter().map(|e| e.norm()).fold(0.0, f64::max)
}

/// Closed-form solution of the log-form phase equations. All roots lie on the
/// unit circle with `(N+M+1) θ_i = π(N−1) + Σ_j θ_j + 2π I_i`.
pub fn solve_phase(n: usize, m: usize, quantum_numbers: &[i64]) -> Result<BetheRoots> {
    if n == 0 {
        return Err(Error::OutOfRange { name: "N", value: 0, min: 1, max: i64::MAX });
    }
    if quantum_numbers.len() != n {
        return Err(Error::PointCount { what: "quantum numbers", expected: n, got: quantum_numbers.len() });
    }
    let period = (n + m + 1) as i64;
    let mut residues: Vec<i64> = quantum_numbers.iter().map(|k| k.rem_euclid(period)).collect();
    residues.sort_unstable();
    residues.dedup();
    if residues.len() != n {
        return Err(Error::QuantumNumbers(period as usize));
    }
    let sum_i: i64 = quantum_numbers.iter().sum();
    let total = (PI * (n * (n - 1)) as f64 + 2.0 * PI * sum_i as f64) / (m + 1) as f64;
    let roots: Vec<Complex64> = quantum_numbers
        .iter()
        .map(|&k| {
            let theta = (PI * (n - 1) as f64 + total + 2.0 * PI * k as f64) / period as f64;
            Complex64::from_polar(1.0, theta)
        })
        .collect();
    let residual = residual(ModelKind::Phase, m, 0.0, &roots);
    Ok(BetheRoots::sorted(roots, residual))
}

fn newton(m: usize, q: f64, mut y: Vec<Complex64>) -> Result<Vec<Complex64>> {
    let n = y.len();
    for _ in 0..MAX_NEWTON_ITERS {
        let f = DVector::from_vec(poly_system(m, q, &y));
        if f.iter().all(|v| v.norm() < NEWTON_TOL) {
            return Ok(y);
        }
        let step = poly_jacobian(m, q, &y).lu().solve(&f).ok_or(Error::SingularJacobian)?;
        if step.iter().any(|s| !s.re.is_finite() || !s.im.is_finite()) {
            return Err(Error::SingularJacobian);
        }
        for i in 0..n {
            y[i] -= step[i];
        }
        if step.iter().all(|s| s.norm() < NEWTON_TOL) {
            return Ok(y);
        }
    }
    Err(Error::NoConvergence { iterations: MAX_NEWTON_ITERS, residual: residual(ModelKind::QBoson, m, q, &y) })
}

/// Newton solve of the q-boson equations at `q` starting from `initial`.
pub fn solve_qboson(n: usize, m: usize, q: f64, initial: &BetheRoots) -> Result<BetheRoots> {
    if !(0.0..1.0).contains(&q) {
        return Err(Error::Unsupported(format!("Q = {q} outside [0, 1)")));
    }
    if initial.roots.len() != n {
        return Err(Error::PointCount { what: "initial roots", expected: n, got: initial.roots.len() });
    }
    let y = newton(m, q, initial.roots.clone())?;
    let r = residual(ModelKind::QBoson, m, q, &y);
    Ok(BetheRoots::sorted(y, r))
}

/// One step of a continuation path.
#[derive(Clone, Debug, Serialize)]
pub struct ContinuationStep {
    pub q: f64,
    pub roots: BetheRoots,
    /// Largest displacement of a tracked root since the previous step.
    pub max_shift: f64,
    /// Whether every tracked root is still nearest to its own predecessor.
    pub branch_consistent: bool,
}

fn nearest_match_consistent(prev: &[Complex64], next: &[Complex64]) -> bool {
    next.iter().enumerate().all(|(i, y)| {
        let nearest = prev.iter().enumerate().min_by(|a, b| (a.1 - y).norm().total_cmp(&(b.1 - y).norm())).map(|(j, _)| j);
        nearest == Some(i)
    })
}

/// Tracks phase-chain roots from `Q = 0` to `q_end` in `steps` equal steps.
/// Roots are tracked in input order; each reported set is sorted.
pub fn continue_qboson(n: usize, m: usize, quantum_numbers: &[i64], q_end: f64, steps: usize) -> Result<Vec<ContinuationStep>> {
    let start = solve_phase(n, m, quantum_numbers)?;
    let mut y = start.roots.clone();
    let mut out = vec![ContinuationStep { q: 0.0, roots: start, max_shift: 0.0, branch_consistent: true }];
    for s in 1..=steps {
        let q = q_end * s as f64 / steps as f64;
        let next = newton(m, q, y.clone())?;
        let max_shift = y.iter().zip(&next).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        let r = residual(ModelKind::QBoson, m, q, &next);
        let branch_consistent = nearest_match_consistent(&y, &next);
        y = next;
        out.push(ContinuationStep { q, roots: BetheRoots::sorted(y.clone(), r), max_shift, branch_consistent });
    }
    Ok(out)
}

/// Default quantum numbers `0, 1, …, N−1`.
pub fn default_quantum_numbers(n: usize) -> Vec<i64> {
    (0..n as i64).collect()
}
