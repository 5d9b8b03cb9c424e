//! Exact determinants and triangular solves.

use num_traits::{One, Zero};

use super::qpoly::QPoly;
use super::scalar::Scalar;

pub type Matrix<T> = Vec<Vec<T>>;

/// Determinant over the rationals by Gaussian elimination with row pivoting.
/// The empty matrix has determinant 1.
pub fn det(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    let mut a: Matrix<Scalar> = m.to_vec();
    let mut sign_flip = false;
    let mut acc = Scalar::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if piv != col {
            a.swap(piv, col);
            sign_flip = !sign_flip;
        }
        let p = a[col][col].clone();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..n {
                let delta = &f * &a[col][c];
                a[r][c] -= delta;
            }
        }
        acc *= p;
    }
    if sign_flip {
        -acc
    } else {
        acc
    }
}

/// Fraction-free (Bareiss) determinant over polynomials. Each division is exact.
pub fn det_poly(m: &[Vec<QPoly>]) -> QPoly {
    let n = m.len();
    if n == 0 {
        return QPoly::one();
    }
    let mut a: Matrix<QPoly> = m.to_vec();
    let mut negate = false;
    let mut prev = QPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return QPoly::zero();
            };
            a.swap(piv, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

pub fn identity_poly(n: usize) -> Matrix<QPoly> {
    (0..n).map(|i| (0..n).map(|j| if i == j { QPoly::one() } else { QPoly::zero() }).collect()).collect()
}

pub fn mat_mul_poly(a: &[Vec<QPoly>], b: &[Vec<QPoly>]) -> Matrix<QPoly> {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    (0..k).fold(QPoly::zero(), |acc, l| {
                        if a[i][l].is_zero() || b[l][j].is_zero() {
                            acc
                        } else {
                            &acc + &(&a[i][l] * &b[l][j])
                        }
                    })
                })
                .collect()
        })
        .collect()
}

pub fn transpose<T: Clone>(a: &[Vec<T>]) -> Matrix<T> {
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Inverse of an upper unitriangular polynomial matrix by back substitution.
/// Returns `None` if the input is not upper unitriangular.
pub fn unitriangular_inverse(u: &[Vec<QPoly>]) -> Option<Matrix<QPoly>> {
    let n = u.len();
    for i in 0..n {
        if !u[i][i].is_one() || (0..i).any(|j| !u[i][j].is_zero()) {
            return None;
        }
    }
    let mut inv = identity_poly(n);
    // Column j of the inverse: solve U x = e_j from the bottom up.
    for j in 0..n {
        for i in (0..j).rev() {
            let mut s = QPoly::zero();
            for k in i + 1..=j {
                if !u[i][k].is_zero() && !inv[k][j].is_zero() {
                    s = &s + &(&u[i][k] * &inv[k][j]);
                }
            }
            inv[i][j] = -s;
        }
    }
    Some(inv)
}
