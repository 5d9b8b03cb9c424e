//! Brute-force ground truth: explicit occupation-basis operators for both
//! chains, monodromy entries, Bethe states and vacuum pairings.
//!
//! Two gauges of the site L-matrix are used. The spectral form
//! `[[u^{-1}, φ†], [φ, u]]` with `x = u²` is the textbook one. Conjugating
//! `u·L` by `diag(1, u)` gives `[[1, φ†], [x φ, x]]`, whose ordered product has
//! `𝔹(x) = x^{M/2} B(x)` as its upper-right entry and
//! `ℂ(x) = x^{M/2} C(1/x) = x^{M+1} [Π L̂(1/x)]_{21}`, so the creation and
//! annihilation strings are polynomial in `x` and need no square roots.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::algebra::scalar::{self, Scalar};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_in_box, occupation_from_partition, OccupationState, Partition};
use crate::phase_model::string_enum;
use crate::symfunc::PointSet;

/// Field of matrix coefficients: exact rationals, or complex floats for
/// on-shell experiments.
pub trait Coeff:
    Clone + Debug + PartialEq + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn from_scalar(s: &Scalar) -> Self;
    fn inv(&self) -> Self;

    fn powu(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc * self.clone())
    }
}

impl Coeff for Scalar {
    fn from_scalar(s: &Scalar) -> Self {
        s.clone()
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl Coeff for Complex64 {
    fn from_scalar(s: &Scalar) -> Self {
        Complex64::new(scalar::to_f64(s), 0.0)
    }
    fn inv(&self) -> Self {
        Complex64::one() / self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Model {
    Phase,
    /// The deformation parameter Q.
    QBoson(Scalar),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    Phase,
    QBoson,
}
string_enum!(ModelKind { Phase => "phase", QBoson => "qboson" });

/// Occupation states of sites `0..=M` with at most `bound` particles, grouped
/// by particle number. Within a sector the order follows `enumerate_in_box`.
#[derive(Clone, Debug)]
pub struct SectorBasis {
    m: usize,
    sectors: Vec<Vec<OccupationState>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

impl SectorBasis {
    pub fn new(m: usize, bound: usize) -> Self {
        let sectors: Vec<Vec<OccupationState>> = (0..=bound)
            .map(|k| {
                enumerate_in_box(k, m).iter().map(|l| occupation_from_partition(l, k, m).expect("inside box")).collect()
            })
            .collect();
        let index = sectors.iter().map(|s| s.iter().enumerate().map(|(i, st)| (st.0.clone(), i)).collect()).collect();
        SectorBasis { m, sectors, index }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn bound(&self) -> usize {
        self.sectors.len() - 1
    }

    pub fn dim(&self, k: usize) -> usize {
        self.sectors[k].len()
    }

    pub fn states(&self, k: usize) -> &[OccupationState] {
        &self.sectors[k]
    }

    /// The partition labelling each state of sector `k`.
    pub fn partitions(&self, k: usize) -> Vec<Partition> {
        enumerate_in_box(k, self.m)
    }

    pub fn index_of(&self, k: usize, state: &[usize]) -> Option<usize> {
        self.index.get(k)?.get(state).copied()
    }
}

/// A vector of definite particle number.
#[derive(Clone, Debug, PartialEq)]
pub struct SectorVector<C> {
    pub k: usize,
    pub coeffs: Vec<C>,
}

impl<C: Coeff> SectorVector<C> {
    pub fn zero(basis: &SectorBasis, k: usize) -> Self {
        SectorVector { k, coeffs: vec![C::zero(); basis.dim(k)] }
    }

    pub fn vacuum() -> Self {
        SectorVector { k: 0, coeffs: vec![C::one()] }
    }

    pub fn scale(&self, c: &C) -> Self {
        SectorVector { k: self.k, coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k, "adding vectors from different sectors");
        SectorVector { k: self.k, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect() }
    }
}

/// Column-sparse matrix: `columns[j]` lists `(row, value)` pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<C> {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<(usize, C)>>,
}

impl<C: Coeff> SparseMatrix<C> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: n, columns: (0..n).map(|j| vec![(j, C::one())]).collect() }
    }

    pub fn apply(&self, v: &[C]) -> Vec<C> {
        let mut out = vec![C::zero(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            if v[j].is_zero() {
                continue;
            }
            for (i, c) in col {
                out[*i] = out[*i].clone() + c.clone() * v[j].clone();
            }
        }
        out
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, C> = BTreeMap::new();
                for (k, c) in col {
                    for (i, d) in &self.columns[*k] {
                        let e = acc.entry(*i).or_insert_with(C::zero);
                        *e = e.clone() + d.clone() * c.clone();
                    }
                }
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: other.cols, columns }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, C> = a.iter().cloned().collect();
                for (i, c) in b {
                    let e = acc.entry(*i).or_insert_with(C::zero);
                    *e = e.clone() + c.clone();
                }
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, columns }
    }

    pub fn scale(&self, s: &C) -> Self {
        let columns = self
            .columns
            .iter()
            .map(|col| col.iter().map(|(i, c)| (*i, c.clone() * s.clone())).filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, columns }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.iter().all(|(_, v)| v.is_zero()))
    }

    pub fn to_dense(&self) -> Vec<Vec<C>> {
        let mut d = vec![vec![C::zero(); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col {
                d[*i][j] = c.clone();
            }
        }
        d
    }
}

/// A linear map from sector `source` to sector `target`.
#[derive(Clone, Debug, PartialEq)]
pub struct SectorOperator<C> {
    pub source: usize,
    pub target: usize,
    pub matrix: SparseMatrix<C>,
}

/// An operator shifting particle number by `shift`, stored block by block.
/// `blocks[k]` maps sector `k` to sector `k + shift`; it is `None` where the
/// target falls outside the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedOperator<C> {
    pub shift: i64,
    pub blocks: Vec<Option<SparseMatrix<C>>>,
}

impl<C: Coeff> GradedOperator<C> {
    fn target(basis: &SectorBasis, k: usize, shift: i64) -> Option<usize> {
        let t = k as i64 + shift;
        (t >= 0 && t as usize <= basis.bound()).then_some(t as usize)
    }

    pub fn zero(basis: &SectorBasis, shift: i64) -> Self {
        let blocks = (0..=basis.bound())
            .map(|k| Self::target(basis, k, shift).map(|t| SparseMatrix::zero(basis.dim(t), basis.dim(k))))
            .collect();
        GradedOperator { shift, blocks }
    }

    pub fn identity(basis: &SectorBasis) -> Self {
        GradedOperator { shift: 0, blocks: (0..=basis.bound()).map(|k| Some(SparseMatrix::identity(basis.dim(k)))).collect() }
    }

    /// `self ∘ other`. A block is kept only when every intermediate sector exists.
    pub fn compose(&self, other: &Self) -> Self {
        let blocks = other
            .blocks
            .iter()
            .enumerate()
            .map(|(k, b)| {
                let b = b.as_ref()?;
                let mid = (k as i64 + other.shift) as usize;
                let a = self.blocks.get(mid)?.as_ref()?;
                Some(a.compose(b))
            })
            .collect();
        GradedOperator { shift: self.shift + other.shift, blocks }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shift, other.shift, "adding operators of different grading");
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| match (a, b) {
                (Some(a), Some(b)) => Some(a.add(b)),
                _ => None,
            })
            .collect();
        GradedOperator { shift: self.shift, blocks }
    }

    pub fn scale(&self, s: &C) -> Self {
        GradedOperator { shift: self.shift, blocks: self.blocks.iter().map(|b| b.as_ref().map(|m| m.scale(s))).collect() }
    }

    pub fn sector_operator(&self, source: usize) -> Option<SectorOperator<C>> {
        let m = self.blocks.get(source)?.as_ref()?;
        Some(SectorOperator { source, target: (source as i64 + self.shift) as usize, matrix: m.clone() })
    }

    pub fn apply(&self, v: &SectorVector<C>) -> Option<SectorVector<C>> {
        let m = self.blocks.get(v.k)?.as_ref()?;
        Some(SectorVector { k: (v.k as i64 + self.shift) as usize, coeffs: m.apply(&v.coeffs) })
    }

    /// Whether every stored block is structurally consistent with the
    /// declared shift (shape matches source and target sector sizes).
    pub fn respects_grading(&self, basis: &SectorBasis) -> bool {
        self.blocks.iter().enumerate().all(|(k, b)| match b {
            None => true,
            Some(m) => match Self::target(basis, k, self.shift) {
                Some(t) => m.rows == basis.dim(t) && m.cols == basis.dim(k),
                None => false,
            },
        })
    }
}

/// The four monodromy entries as graded operators.
#[derive(Clone, Debug)]
pub struct Monodromy<C> {
    pub a: GradedOperator<C>,
    pub b: GradedOperator<C>,
    pub c: GradedOperator<C>,
    pub d: GradedOperator<C>,
}

/// Site L-matrix `[[d1, r·raise], [l·lower, d2]]`.
#[derive(Clone, Debug)]
struct LParams<C> {
    d1: C,
    r: C,
    l: C,
    d2: C,
}

/// A finite chain with its occupation basis; the engine behind every oracle value.
#[derive(Clone, Debug)]
pub struct Chain<C> {
    model: Model,
    q: C,
    basis: SectorBasis,
}

impl<C: Coeff> Chain<C> {
    pub fn new(model: Model, m: usize, bound: usize) -> Self {
        let q = match &model {
            Model::Phase => C::zero(),
            Model::QBoson(q) => C::from_scalar(q),
        };
        Chain { model, q, basis: SectorBasis::new(m, bound) }
    }

    pub fn basis(&self) -> &SectorBasis {
        &self.basis
    }

    pub fn model(&self) -> &Model {
        &self.model
    }

    fn m(&self) -> usize {
        self.basis.m
    }

    /// `1 − Q^k`
    fn one_minus_q_pow(&self, k: usize) -> C {
        C::one() - self.q.powu(k)
    }

    /// Matrix element of the raising operator at `site` on a state with
    /// `n` particles there. q-boson operators carry the `(1 − Q)^{1/2}` factor.
    fn raise_element(&self, site: usize, n: usize) -> C {
        match self.model {
            Model::Phase => C::one(),
            Model::QBoson(_) if site == 0 => C::one(),
            Model::QBoson(_) => self.one_minus_q_pow(n + 1),
        }
    }

    fn lower_element(&self, site: usize, n: usize) -> C {
        match self.model {
            Model::Phase => C::one(),
            Model::QBoson(_) if site == 0 => self.one_minus_q_pow(n),
            Model::QBoson(_) => C::one(),
        }
    }

    pub fn raise(&self, site: usize, v: &SectorVector<C>) -> SectorVector<C> {
        let k = v.k + 1;
        assert!(k <= self.basis.bound(), "raising past the basis bound");
        let mut out: SectorVector<C> = SectorVector::zero(&self.basis, k);
        for (st, c) in self.basis.states(v.k).iter().zip(&v.coeffs) {
            if c.is_zero() {
                continue;
            }
            let mut t = st.0.clone();
            let n = t[site];
            t[site] += 1;
            let i = self.basis.index_of(k, &t).expect("state in basis");
            out.coeffs[i] = out.coeffs[i].clone() + c.clone() * self.raise_element(site, n);
        }
        out
    }

    /// Lowering on the vacuum sector gives the empty sector-0 zero vector.
    pub fn lower(&self, site: usize, v: &SectorVector<C>) -> SectorVector<C> {
        if v.k == 0 {
            return SectorVector::zero(&self.basis, 0);
        }
        let k = v.k - 1;
        let mut out: SectorVector<C> = SectorVector::zero(&self.basis, k);
        for (st, c) in self.basis.states(v.k).iter().zip(&v.coeffs) {
            let n = st.0[site];
            if c.is_zero() || n == 0 {
                continue;
            }
            let mut t = st.0.clone();
            t[site] -= 1;
            let i = self.basis.index_of(k, &t).expect("state in basis");
            out.coeffs[i] = out.coeffs[i].clone() + c.clone() * self.lower_element(site, n);
        }
        out
    }

    fn site_operator(&self, site: usize, raise: bool) -> GradedOperator<C> {
        let shift = if raise { 1 } else { -1 };
        let mut op = GradedOperator::zero(&self.basis, shift);
        for k in 0..=self.basis.bound() {
            if op.blocks[k].is_none() {
                continue;
            }
            let dim = self.basis.dim(k);
            let target_dim = self.basis.dim((k as i64 + shift) as usize);
            let mut m = SparseMatrix::zero(target_dim, dim);
            for j in 0..dim {
                let mut e = SectorVector::zero(&self.basis, k);
                e.coeffs[j] = C::one();
                let img = if raise { self.raise(site, &e) } else { self.lower(site, &e) };
                m.columns[j] = img.coeffs.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            }
            op.blocks[k] = Some(m);
        }
        op
    }

    fn spectral_params(u: &C) -> LParams<C> {
        LParams { d1: u.inv(), r: C::one(), l: C::one(), d2: u.clone() }
    }

    fn gauged_params(x: &C) -> LParams<C> {
        LParams { d1: C::one(), r: C::one(), l: x.clone(), d2: x.clone() }
    }

    fn monodromy_ops(&self, p: &LParams<C>) -> Monodromy<C> {
        let id = GradedOperator::identity(&self.basis);
        let mut t = Monodromy { a: id.clone(), b: GradedOperator::zero(&self.basis, 1), c: GradedOperator::zero(&self.basis, -1), d: id };
        for n in 0..=self.m() {
            let up = self.site_operator(n, true);
            let down = self.site_operator(n, false);
            t = Monodromy {
                a: t.a.scale(&p.d1).add(&up.compose(&t.c).scale(&p.r)),
                b: t.b.scale(&p.d1).add(&up.compose(&t.d).scale(&p.r)),
                c: down.compose(&t.a).scale(&p.l).add(&t.c.scale(&p.d2)),
                d: down.compose(&t.b).scale(&p.l).add(&t.d.scale(&p.d2)),
            };
        }
        t
    }

    /// `T(u) = L_M(u) ⋯ L_0(u)` with `L = [[u^{-1}, φ†], [φ, u]]`, as operators.
    pub fn build_monodromy(&self, u: &C) -> Result<Monodromy<C>> {
        if u.is_zero() {
            return Err(Error::ZeroParameter);
        }
        Ok(self.monodromy_ops(&Self::spectral_params(u)))
    }

    /// Monodromy in the square-root-free gauge at spectral value `x`.
    pub fn build_gauged_monodromy(&self, x: &C) -> Monodromy<C> {
        self.monodromy_ops(&Self::gauged_params(x))
    }

    /// Applies the monodromy to the column `(top, bottom)`; either half may be
    /// absent. Returns the image column.
    fn apply_column(
        &self,
        p: &LParams<C>,
        mut top: Option<SectorVector<C>>,
        mut bottom: Option<SectorVector<C>>,
    ) -> (Option<SectorVector<C>>, Option<SectorVector<C>>) {
        let add = |a: Option<SectorVector<C>>, b: Option<SectorVector<C>>| match (a, b) {
            (Some(a), Some(b)) => Some(a.add(&b)),
            (a, None) => a,
            (None, b) => b,
        };
        for n in 0..=self.m() {
            let new_top = add(top.as_ref().map(|v| v.scale(&p.d1)), bottom.as_ref().map(|v| self.raise(n, v).scale(&p.r)));
            let new_bottom = add(
                top.as_ref().filter(|v| v.k > 0).map(|v| self.lower(n, v).scale(&p.l)),
                bottom.as_ref().map(|v| v.scale(&p.d2)),
            );
            top = new_top;
            bottom = new_bottom;
        }
        (top, bottom)
    }

    /// `B(u) v` in the spectral gauge.
    pub fn apply_b(&self, u: &C, v: &SectorVector<C>) -> SectorVector<C> {
        self.apply_column(&Self::spectral_params(u), None, Some(v.clone())).0.expect("B image")
    }

    /// `C(u) v` in the spectral gauge; `v` must have at least one particle.
    pub fn apply_c(&self, u: &C, v: &SectorVector<C>) -> SectorVector<C> {
        assert!(v.k > 0, "C lowers particle number");
        self.apply_column(&Self::spectral_params(u), Some(v.clone()), None).1.expect("C image")
    }

    /// `𝔹(x) v = x^{M/2} B(x) v`
    pub fn apply_bb(&self, x: &C, v: &SectorVector<C>) -> SectorVector<C> {
        self.apply_column(&Self::gauged_params(x), None, Some(v.clone())).0.expect("B image")
    }

    /// `ℂ(x) v = x^{M/2} C(1/x) v`; the zero vector of sector 0 when `v` is the vacuum sector.
    pub fn apply_cc(&self, x: &C, v: &SectorVector<C>) -> SectorVector<C> {
        if v.k == 0 {
            return SectorVector::zero(&self.basis, 0);
        }
        let p = Self::gauged_params(&x.inv());
        let img = self.apply_column(&p, Some(v.clone()), None).1.expect("C image");
        img.scale(&x.powu(self.m() + 1))
    }

    /// `(A + D)(x) v` up to the scalar factor `x^{(M+1)/2}`: the trace of the gauged monodromy.
    /// The D column passes through sector `k + 1`, so the basis bound must exceed `v.k`.
    pub fn apply_transfer(&self, x: &C, v: &SectorVector<C>) -> SectorVector<C> {
        let p = Self::gauged_params(x);
        let a = self.apply_column(&p, Some(v.clone()), None).0.expect("A image");
        let d = self.apply_column(&p, None, Some(v.clone())).1.expect("D image");
        a.add(&d)
    }

    /// `Π_j 𝔹(y_j) |0⟩`
    pub fn bethe_state(&self, y: &[C]) -> SectorVector<C> {
        y.iter().fold(SectorVector::vacuum(), |v, yj| self.apply_bb(yj, &v))
    }

    /// Coefficients of `⟨0| Π_j ℂ(x_j)` on the basis of sector `|x|`.
    pub fn dual_bethe_state(&self, x: &[C]) -> Vec<C> {
        let k = x.len();
        (0..self.basis.dim(k))
            .map(|i| {
                let mut e = SectorVector::zero(&self.basis, k);
                e.coeffs[i] = C::one();
                let v = x.iter().fold(e, |v, xj| self.apply_cc(xj, &v));
                v.coeffs[0].clone()
            })
            .collect()
    }

    /// `⟨0| Π ℂ(x_i) [φ_m†] Π 𝔹(y_j) |0⟩` by direct application.
    pub fn pairing(&self, x: &[C], y: &[C], insertion: Option<usize>) -> Result<C> {
        let created = y.len() + usize::from(insertion.is_some());
        if created != x.len() {
            return Err(Error::Grading(format!("{} annihilation strings against {} created particles", x.len(), created)));
        }
        let mut v: SectorVector<C> = SectorVector::vacuum();
        if let Some(site) = insertion {
            if site > self.m() {
                return Err(Error::OutOfRange { name: "m", value: site as i64, min: 0, max: self.m() as i64 });
            }
            v = self.raise(site, &v);
        }
        for yj in y {
            v = self.apply_bb(yj, &v);
        }
        for xi in x {
            v = self.apply_cc(xi, &v);
        }
        Ok(v.coeffs[0].clone())
    }
}

fn exact_chain(model: &Model, m: usize, bound: usize) -> Chain<Scalar> {
    Chain::new(model.clone(), m, bound)
}

/// Monodromy entries at `u` (with `x = u²`) on the basis with up to `n` particles.
/// Built internally on `n + 1` particles so that every block with source
/// sector `≤ n` is free of truncation.
pub fn build_monodromy(model: &Model, m: usize, n: usize, u: &Scalar) -> Result<(SectorBasis, Monodromy<Scalar>)> {
    let chain = exact_chain(model, m, n + 1);
    let t = chain.build_monodromy(u)?;
    let keep = |op: GradedOperator<Scalar>| GradedOperator {
        shift: op.shift,
        blocks: op.blocks.into_iter().take(n + 1).map(|b| b.filter(|m| m.rows > 0)).collect(),
    };
    let mut t = Monodromy { a: keep(t.a), b: keep(t.b), c: keep(t.c), d: keep(t.d) };
    // B on the top sector would land outside the exposed basis.
    if let Some(last) = t.b.blocks.last_mut() {
        *last = None;
    }
    Ok((SectorBasis::new(m, n), t))
}

/// `Π_j 𝔹(y_j)|0⟩` as coefficients over sector `|y|`, at spectral values `y`.
pub fn bethe_state(model: &Model, m: usize, y: &PointSet) -> Vec<Scalar> {
    exact_chain(model, m, y.len()).bethe_state(y.points()).coeffs
}

/// Same as [`bethe_state`] with roots given as `u` values, `y = u²`.
pub fn bethe_state_from_u(model: &Model, m: usize, u: &PointSet) -> Vec<Scalar> {
    bethe_state(model, m, &u.powered(2))
}

/// `⟨0| Π_j ℂ(x_j)` as coefficients over sector `|x|`.
pub fn dual_bethe_state(model: &Model, m: usize, x: &PointSet) -> Vec<Scalar> {
    exact_chain(model, m, x.len()).dual_bethe_state(x.points())
}

/// Exact vacuum pairing `⟨0| Π ℂ(x) [φ_m†] Π 𝔹(y) |0⟩`.
pub fn oracle_pairing(model: &Model, m: usize, x: &PointSet, y: &PointSet, insertion: Option<usize>) -> Result<Scalar> {
    exact_chain(model, m, x.len()).pairing(x.points(), y.points(), insertion)
}

/// Whether `𝔹(y1) 𝔹(y2) = 𝔹(y2) 𝔹(y1)` as operators on sectors `0..=bound − 2`.
pub fn creation_operators_commute(model: &Model, m: usize, bound: usize, y1: &Scalar, y2: &Scalar) -> bool {
    let chain = exact_chain(model, m, bound);
    let b1 = chain.build_gauged_monodromy(y1).b;
    let b2 = chain.build_gauged_monodromy(y2).b;
    let lhs = b1.compose(&b2);
    let rhs = b2.compose(&b1);
    lhs.blocks.iter().zip(&rhs.blocks).all(|(a, b)| match (a, b) {
        (Some(a), Some(b)) => a.add(&b.scale(&-Scalar::one())).is_zero(),
        (None, None) => true,
        _ => false,
    })
}
