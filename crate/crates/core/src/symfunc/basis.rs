use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::PointSet;
use crate::algebra::scalar::{powi, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Power,
    Elementary,
    Homogeneous,
}

pub fn p_value(k: usize, x: &PointSet) -> Scalar {
    x.iter().map(|xi| powi(xi, k as i64)).fold(Scalar::zero(), |a, b| a + b)
}

/// `h_0, …, h_kmax` of the points, by adding one variable at a time.
pub fn h_values(x: &PointSet, kmax: usize) -> Vec<Scalar> {
    let mut h = vec![Scalar::zero(); kmax + 1];
    h[0] = Scalar::one();
    for xi in x.iter() {
        // multiply the generating function by 1/(1 - xi z)
        for k in 1..=kmax {
            let add = xi * &h[k - 1];
            h[k] += add;
        }
    }
    h
}

/// `e_0, …, e_n` where `n = |x|`; higher ones vanish.
pub fn e_values(x: &PointSet) -> Vec<Scalar> {
    let n = x.len();
    let mut e = vec![Scalar::zero(); n + 1];
    e[0] = Scalar::one();
    for (i, xi) in x.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            let add = xi * &e[k - 1];
            e[k] += add;
        }
    }
    e
}

pub fn basis_eval(kind: BasisKind, k: i64, x: &PointSet) -> Result<Scalar> {
    if k < 0 {
        return Err(Error::NegativeDegree(k));
    }
    let k = k as usize;
    Ok(match kind {
        BasisKind::Power => p_value(k, x),
        BasisKind::Homogeneous => h_values(x, k).pop().expect("nonempty"),
        BasisKind::Elementary => e_values(x).get(k).cloned().unwrap_or_else(Scalar::zero),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{frac, int};

    #[test]
    fn examples() {
        let x = PointSet::new(vec![int(2), int(3)]);
        assert_eq!(basis_eval(BasisKind::Power, 1, &x).unwrap(), int(5));
        assert_eq!(basis_eval(BasisKind::Elementary, 3, &x).unwrap(), int(0));
        assert_eq!(basis_eval(BasisKind::Elementary, 2, &x).unwrap(), int(6));
        assert_eq!(basis_eval(BasisKind::Homogeneous, 2, &PointSet::new(vec![frac(1, 2)])).unwrap(), frac(1, 4));
        assert_eq!(basis_eval(BasisKind::Homogeneous, 2, &x).unwrap(), int(4 + 6 + 9));
        assert!(matches!(basis_eval(BasisKind::Power, -1, &x), Err(Error::NegativeDegree(-1))));
        assert_eq!(basis_eval(BasisKind::Power, 0, &x).unwrap(), int(2));
    }

    #[test]
    fn newton_identity() {
        // 2 e_2 = e_1 p_1 - p_2
        let x = PointSet::new(vec![frac(1, 3), int(-2), frac(5, 7)]);
        let e = e_values(&x);
        assert_eq!(int(2) * &e[2], &e[1] * p_value(1, &x) - p_value(2, &x));
    }
}
