//! Kostka-Foulkes transition matrices between Schur and Hall-Littlewood bases.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::Serialize;

use super::hall_littlewood::{hl_monomial_expansion, schur_monomial_expansion};
use crate::algebra::linalg::{identity_poly, mat_mul_poly, transpose, unitriangular_inverse, Matrix};
use crate::algebra::QPoly;
use crate::partitions::{b_lambda, partitions_of, Partition};

/// `s_λ = Σ_µ K_{λµ}(Q) P_µ` for all λ, µ of one weight, plus the inverse matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KostkaTables {
    pub weight: usize,
    pub order: Vec<Partition>,
    #[serde(rename = "K")]
    pub k: Matrix<QPoly>,
    #[serde(rename = "K_inv")]
    pub k_inv: Matrix<QPoly>,
}

impl KostkaTables {
    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.order.iter().position(|p| p == lambda)
    }

    pub fn entry(&self, lambda: &Partition, mu: &Partition) -> Option<&QPoly> {
        Some(&self.k[self.index_of(lambda)?][self.index_of(mu)?])
    }

    /// `K_{λλ} = 1` and `K_{λµ} = 0` unless `λ ⊵ µ`.
    pub fn is_unitriangular(&self) -> bool {
        let n = self.order.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let e = &self.k[i][j];
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero() || self.order[i].dominates(&self.order[j])
                }
            })
        })
    }

    pub fn inverse_is_exact(&self) -> bool {
        let n = self.order.len();
        mat_mul_poly(&self.k, &self.k_inv) == identity_poly(n) && mat_mul_poly(&self.k_inv, &self.k) == identity_poly(n)
    }
}

/// Rows are partitions, columns monomial coefficients, both in canonical order.
fn monomial_matrix(order: &[Partition], hall_littlewood: bool) -> Matrix<QPoly> {
    order
        .iter()
        .map(|lam| {
            let e = if hall_littlewood { (*hl_monomial_expansion(lam)).clone() } else { schur_monomial_expansion(lam) };
            order.iter().map(|mu| e.coeff(mu)).collect()
        })
        .collect()
}

fn compute(d: usize) -> KostkaTables {
    let order = partitions_of(d);
    let s = monomial_matrix(&order, false);
    let p = monomial_matrix(&order, true);
    let p_inv = unitriangular_inverse(&p).expect("P is unitriangular in the monomial basis");
    let s_inv = unitriangular_inverse(&s).expect("s is unitriangular in the monomial basis");
    let k = mat_mul_poly(&s, &p_inv);
    let k_inv = mat_mul_poly(&p, &s_inv);
    KostkaTables { weight: d, order, k, k_inv }
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<KostkaTables>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<KostkaTables>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Tables for weight `d`, cached.
pub fn kostka_tables(d: usize) -> Arc<KostkaTables> {
    if let Some(t) = cache().lock().expect("cache lock").get(&d) {
        return t.clone();
    }
    let t = Arc::new(compute(d));
    cache().lock().expect("cache lock").insert(d, t.clone());
    t
}

/// `c̃ = (K^{-1})^T diag(b) K^{-1}` over the partitions of weight `d`.
pub fn c_tilde_matrix(d: usize) -> Matrix<QPoly> {
    let t = kostka_tables(d);
    let b: Vec<QPoly> = t.order.iter().map(b_lambda).collect();
    let scaled: Matrix<QPoly> = t.k_inv.iter().zip(&b).map(|(row, bl)| row.iter().map(|e| e * bl).collect()).collect();
    mat_mul_poly(&transpose(&t.k_inv), &scaled)
}

/// Whether `c̃ · (K b^{-1} K^T)` is exactly the identity. The `b^{-1}` step is
/// an exact polynomial division of the columns of `c̃ K`.
pub fn c_tilde_inverse_check(d: usize) -> bool {
    let t = kostka_tables(d);
    let c = c_tilde_matrix(d);
    let ck = mat_mul_poly(&c, &t.k);
    let mut divided = ck.clone();
    for (j, lam) in t.order.iter().enumerate() {
        let b = b_lambda(lam);
        for row in divided.iter_mut() {
            match row[j].div_exact(&b) {
                Some(q) => row[j] = q,
                None => return false,
            }
        }
    }
    mat_mul_poly(&divided, &transpose(&t.k)) == identity_poly(t.order.len())
}

/// Number of semistandard tableaux of shape `λ` and content `µ`, by direct
/// enumeration. Independent of the tables above; `K_{λµ}(1)` must equal it.
pub fn tableau_count(lambda: &Partition, mu: &Partition) -> u64 {
    if lambda.weight() != mu.weight() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..lambda.length()).flat_map(|r| (0..lambda.part(r)).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&l| vec![0; l]).collect();
    let mut left: Vec<usize> = mu.parts().to_vec();
    fn fill(i: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> u64 {
        let Some(&(r, c)) = cells.get(i) else { return 1 };
        let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..left.len() {
            if left[v] == 0 {
                continue;
            }
            left[v] -= 1;
            grid[r][c] = v;
            total += fill(i + 1, cells, grid, left);
            left[v] += 1;
        }
        total
    }
    fill(0, &cells, &mut grid, &mut left)
}

/// Whether `K_{λµ}(1)` is the tableau count for every pair of weight `d`.
pub fn classical_limit_check(d: usize) -> bool {
    let t = kostka_tables(d);
    let one = crate::algebra::Scalar::one();
    t.order.iter().enumerate().all(|(i, lam)| {
        t.order.iter().enumerate().all(|(j, mu)| t.k[i][j].eval(&one) == crate::algebra::Scalar::from_integer(tableau_count(lam, mu).into()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts)
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(tableau_count(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(tableau_count(&p(&[3, 2]), &p(&[2, 2, 1])), 2);
        assert_eq!(tableau_count(&p(&[1, 1]), &p(&[2])), 0);
        assert!(classical_limit_check(5));
    }

    #[test]
    fn weight_two() {
        let t = kostka_tables(2);
        assert_eq!(t.entry(&p(&[2]), &p(&[1, 1])).unwrap(), &QPoly::q());
        assert!(t.entry(&p(&[1, 1]), &p(&[2])).unwrap().is_zero());
        assert!(t.is_unitriangular());
        assert!(t.inverse_is_exact());
    }

    #[test]
    fn weight_three_known_values() {
        // K_{(3),(1,1,1)} = Q^3, K_{(2,1),(1,1,1)} = Q + Q^2
        let t = kostka_tables(3);
        assert_eq!(t.entry(&p(&[3]), &p(&[1, 1, 1])).unwrap(), &QPoly::from_ints(&[0, 0, 0, 1]));
        assert_eq!(t.entry(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), &QPoly::from_ints(&[0, 1, 1]));
        assert_eq!(t.entry(&p(&[3]), &p(&[2, 1])).unwrap(), &QPoly::q());
    }

    #[test]
    fn c_tilde_small() {
        assert_eq!(c_tilde_matrix(0), vec![vec![QPoly::one()]]);
        assert_eq!(c_tilde_matrix(1), vec![vec![QPoly::one_minus_q_pow(1)]]);
        for d in 0..=4 {
            assert!(c_tilde_inverse_check(d), "weight {d}");
        }
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(&*kostka_tables(2)).unwrap();
        assert_eq!(v["weight"], 2);
        assert_eq!(v["order"], serde_json::json!([[2], [1, 1]]));
        assert_eq!(v["K"][0][1], serde_json::json!(["0", "1"]));
        assert_eq!(v["K_inv"][0][1], serde_json::json!(["0", "-1"]));
    }
}
