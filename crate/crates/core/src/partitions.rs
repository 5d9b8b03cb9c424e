//! Partitions, Frobenius coordinates, box enumeration and occupation states.

use std::cmp::Ordering;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::QPoly;
use crate::error::{Error, Result};

/// Weakly decreasing positive parts. Zero parts are stripped on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Panicking constructor for literals known to be valid.
    pub fn from_parts(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition literal")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(m)`; empty for `m = 0`.
    pub fn row(m: usize) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Partition(vec![m])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (zero-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first_part(&self) -> usize {
        self.part(0)
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part();
        Partition((1..=cols).map(|j| self.0.iter().take_while(|&&p| p >= j).count()).collect())
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let d = (0..self.length()).take_while(|&i| self.0[i] > i).count();
        FrobeniusCoords { pairs: (0..d).map(|j| (self.0[j] - j - 1, conj.0[j] - j - 1)).collect() }
    }

    pub fn from_frobenius(f: &FrobeniusCoords) -> Result<Self> {
        let d = f.pairs.len();
        let ok = f.pairs.windows(2).all(|w| w[0].0 > w[1].0 && w[0].1 > w[1].1);
        if !ok {
            return Err(Error::Parse { input: format!("{f}"), reason: "arms and legs must strictly decrease".into() });
        }
        // Rows below the diagonal come from the legs: row i (i ≥ d) has
        // #{j : b_j + j ≥ i} boxes.
        let len = f.pairs.first().map_or(0, |p| p.1 + 1);
        let mut parts = Vec::with_capacity(len);
        for i in 0..len {
            if i < d {
                parts.push(f.pairs[i].0 + i + 1);
            } else {
                parts.push(f.pairs.iter().enumerate().filter(|(j, p)| p.1 + j >= i).count());
            }
        }
        Partition::new(parts)
    }

    /// `self ⊆ other` as Young diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.length() <= other.length() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn fits_in_box(&self, n: usize, m: usize) -> bool {
        self.length() <= n && self.first_part() <= m
    }

    /// Dominance `self ⊵ other`; only meaningful for equal weights.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.length().max(other.length()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `Σ_i (i-1) λ_i`, the usual n(λ) statistic.
    pub fn n_statistic(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }
}

/// Canonical order: weight ascending, then lexicographically decreasing.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let body: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;
    /// Accepts `3,1`, `(3,1)`, `[3,1]`, or an empty string / `∅` for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']).trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim().parse::<usize>().map_err(|e| Error::Parse { input: s.to_string(), reason: e.to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Arm/leg pairs `(a_j | b_j)` along the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusCoords {
    pub pairs: Vec<(usize, usize)>,
}

impl FrobeniusCoords {
    pub fn rank(&self) -> usize {
        self.pairs.len()
    }

    /// `Σ (a_j + b_j) + d`
    pub fn weight(&self) -> usize {
        self.pairs.iter().map(|(a, b)| a + b).sum::<usize>() + self.pairs.len()
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.pairs.iter().map(|p| p.0.to_string()).collect();
        let b: Vec<String> = self.pairs.iter().map(|p| p.1.to_string()).collect();
        write!(f, "({}|{})", a.join(","), b.join(","))
    }
}

/// The hook partition `(a+1, 1^b)` with Frobenius coordinates `(a|b)`.
pub fn hook(a: usize, b: usize) -> Partition {
    let mut parts = vec![a + 1];
    parts.extend(std::iter::repeat_n(1, b));
    Partition(parts)
}

/// Site occupation numbers `(n_0, …, n_M)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OccupationState(pub Vec<usize>);

impl OccupationState {
    pub fn particles(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn sites(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for OccupationState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "|{}⟩", body.join(","))
    }
}

fn partitions_rec(rem: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if max_len == 0 {
        return;
    }
    for p in (1..=max_part.min(rem)).rev() {
        cur.push(p);
        partitions_rec(rem - p, p, max_len - 1, cur, out);
        cur.pop();
    }
}

/// All partitions of `d` in canonical order.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    partitions_in_box_of_weight(d, d, d)
}

/// Partitions of weight `d` with at most `n` rows and parts at most `m`.
pub fn partitions_in_box_of_weight(d: usize, n: usize, m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    partitions_rec(d, m, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions with at most `n` rows and parts at most `m`, canonical order.
pub fn enumerate_in_box(n: usize, m: usize) -> Vec<Partition> {
    (0..=n * m).flat_map(|d| partitions_in_box_of_weight(d, n, m)).collect()
}

/// Partitions of weight at most `d` with at most `n` rows.
pub fn partitions_up_to(d: usize, n: usize) -> Vec<Partition> {
    (0..=d).flat_map(|w| partitions_in_box_of_weight(w, n, w)).collect()
}

/// `[n]! = Π_{i=1}^n (1 − Q^i)`
pub fn q_factorial(n: usize) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, i| &acc * &QPoly::one_minus_q_pow(i))
}

/// `b_λ(Q) = Π_i [m_i(λ)]!` over part sizes `i`.
pub fn b_lambda(lambda: &Partition) -> QPoly {
    let mut acc = QPoly::one();
    let mut i = 0;
    let parts = lambda.parts();
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        acc = &acc * &q_factorial(j - i);
        i = j;
    }
    acc
}

pub fn occupation_from_partition(lambda: &Partition, n: usize, m: usize) -> Result<OccupationState> {
    if !lambda.fits_in_box(n, m) {
        return Err(Error::OutsideBox { partition: lambda.to_string(), n, m });
    }
    let mut counts = vec![0; m + 1];
    counts[0] = n - lambda.length();
    for &p in lambda.parts() {
        counts[p] += 1;
    }
    Ok(OccupationState(counts))
}

/// Inverse of [`occupation_from_partition`]; site 0 is ignored.
pub fn partition_from_occupation(state: &OccupationState) -> Partition {
    let mut parts = Vec::new();
    for i in (1..state.0.len()).rev() {
        parts.extend(std::iter::repeat_n(i, state.0[i]));
    }
    Partition(parts)
}

/// `C(n, k)` as u128.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts)
    }

    #[test]
    fn conjugates() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[3, 3, 1]).conjugate(), p(&[3, 2, 2]));
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(Partition::empty().frobenius().rank(), 0);
        assert_eq!(p(&[1]).frobenius().pairs, vec![(0, 0)]);
        let f = p(&[3, 3, 1]).frobenius();
        assert_eq!(f.pairs, vec![(2, 2), (1, 0)]);
        assert_eq!(f.weight(), 7);
        assert_eq!(Partition::from_frobenius(&f).unwrap(), p(&[3, 3, 1]));
        assert_eq!(hook(2, 1), p(&[3, 1]));
    }

    #[test]
    fn box_enumeration() {
        assert_eq!(enumerate_in_box(0, 3), vec![Partition::empty()]);
        let b = enumerate_in_box(2, 2);
        assert_eq!(b, vec![Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[2, 2])]);
        assert_eq!(enumerate_in_box(1, 4).len(), 5);
        let mut sorted = b.clone();
        sorted.sort();
        assert_eq!(sorted, b);
    }

    #[test]
    fn b_lambda_examples() {
        assert_eq!(b_lambda(&Partition::empty()), QPoly::one());
        assert_eq!(b_lambda(&p(&[1, 1])), &QPoly::one_minus_q_pow(1) * &QPoly::one_minus_q_pow(2));
        assert_eq!(b_lambda(&p(&[2, 1])), QPoly::one_minus_q_pow(1).pow(2));
    }

    #[test]
    fn occupations() {
        assert_eq!(occupation_from_partition(&Partition::empty(), 2, 2).unwrap().0, vec![2, 0, 0]);
        assert_eq!(occupation_from_partition(&p(&[2, 1]), 2, 3).unwrap().0, vec![0, 1, 1, 0]);
        assert_eq!(occupation_from_partition(&p(&[2, 2]), 3, 2).unwrap().0, vec![1, 0, 2]);
        assert!(occupation_from_partition(&p(&[3]), 2, 2).is_err());
        assert!(occupation_from_partition(&p(&[1, 1, 1]), 2, 2).is_err());
    }

    #[test]
    fn dominance_and_containment() {
        assert!(p(&[2]).dominates(&p(&[1, 1])));
        assert!(!p(&[1, 1]).dominates(&p(&[2])));
        assert!(!p(&[3, 1, 1, 1]).dominates(&p(&[2, 2, 2])));
        assert!(!p(&[2, 2, 2]).dominates(&p(&[3, 1, 1, 1])));
        assert!(p(&[1]).is_contained_in(&p(&[2, 1])));
        assert!(!p(&[2]).is_contained_in(&p(&[1, 1])));
    }

    #[test]
    fn parse_and_json() {
        assert_eq!("3,1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("[2,2]".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
        let back: Partition = serde_json::from_str("[2,1,0]").unwrap();
        assert_eq!(back, p(&[2, 1]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn q_factorial_at_zero() {
        assert_eq!(q_factorial(3).eval(&int(0)), int(1));
        assert_eq!(q_factorial(0), QPoly::one());
    }
}
