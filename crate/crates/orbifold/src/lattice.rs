//! Integer lattice linear algebra.
//!
//! Lattices are always described by coordinates in a fixed basis. An
//! [`EvenLattice`] is a Gram matrix; a [`Sublattice`] is a set of integer
//! vectors in the coordinates of an ambient lattice, kept in a canonical
//! Hermite normal form so that equality of sublattices is structural.
//!
//! The Hermite form used here is "lower": the pivot of each row is its last
//! nonzero column, pivots are positive, and the entries of the other rows in a
//! pivot column are reduced into `[0, pivot)`. Coset representatives are
//! reduced into the matching fundamental box and ordered colexicographically,
//! i.e. comparing the last coordinate first.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// Row-major integer matrix.
pub type IntMat = Vec<Vec<i64>>;
/// Rational coordinate vector.
pub type QVec = Vec<Rational>;

/// Small exact rationals used on hot enumeration paths.
pub type SmallRat = Ratio<i128>;

/// A positive-definite even integral lattice, given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenLattice {
    gram: IntMat,
}

impl EvenLattice {
    /// Validates symmetry, evenness and positive definiteness.
    pub fn new(gram: IntMat) -> Result<Self> {
        let n = gram.len();
        for (i, row) in gram.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidLattice(format!(
                    "gram row {} has length {} but the matrix has {} rows",
                    i,
                    row.len(),
                    n
                )));
            }
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::InvalidLattice(format!(
                        "gram is not symmetric at ({}, {})",
                        i, j
                    )));
                }
            }
            if gram[i][i].rem_euclid(2) != 0 {
                return Err(Error::InvalidLattice(format!(
                    "diagonal entry {} = {} is odd, so the lattice is not even",
                    i, gram[i][i]
                )));
            }
        }
        for k in 1..=n {
            let minor: IntMat = gram[..k].iter().map(|r| r[..k].to_vec()).collect();
            if det_int(&minor) <= BigInt::zero() {
                return Err(Error::InvalidLattice(format!(
                    "leading principal minor of size {} is not positive, so the form is not positive definite",
                    k
                )));
            }
        }
        Ok(EvenLattice { gram })
    }

    /// The lattice of rank zero.
    pub fn zero() -> Self {
        EvenLattice { gram: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &IntMat {
        &self.gram
    }

    pub fn det(&self) -> BigInt {
        det_int(&self.gram)
    }

    pub fn inner_int(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut acc: i128 = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                acc += xi as i128 * self.gram[i][j] as i128 * yj as i128;
            }
        }
        acc as i64
    }

    pub fn norm_int(&self, x: &[i64]) -> i64 {
        self.inner_int(x, x)
    }

    /// `G·x` for a rational vector `x`; these are the values `(e_i | x)`.
    pub fn gram_apply(&self, x: &[Rational]) -> QVec {
        self.gram
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .fold(Rational::zero(), |acc, (&g, v)| acc + &Rational::from_int(g) * v)
            })
            .collect()
    }

    /// Gram matrix of the sublattice spanned by the given rows.
    pub fn restricted_gram(&self, basis: &[Vec<i64>]) -> IntMat {
        basis
            .iter()
            .map(|a| basis.iter().map(|b| self.inner_int(a, b)).collect())
            .collect()
    }

    /// Sublattice spanned by the given rows, as a lattice in its own right.
    pub fn sublattice_lattice(&self, basis: &[Vec<i64>]) -> Result<EvenLattice> {
        EvenLattice::new(self.restricted_gram(basis))
    }
}

/// `xᵀ·G·y`, exactly.
pub fn inner(l: &EvenLattice, x: &[Rational], y: &[Rational]) -> Result<Rational> {
    if x.len() != l.rank() || y.len() != l.rank() {
        return Err(Error::Input(format!(
            "dimension mismatch: lattice rank {}, vectors of length {} and {}",
            l.rank(),
            x.len(),
            y.len()
        )));
    }
    let gy = l.gram_apply(y);
    Ok(dot(x, &gy))
}

pub fn norm(l: &EvenLattice, x: &[Rational]) -> Rational {
    inner(l, x, x).expect("dimension checked by caller")
}

/// Rows are the dual basis in the coordinates of the lattice basis, i.e. `G⁻¹`.
pub fn dual_basis(l: &EvenLattice) -> Vec<QVec> {
    inverse_rational(&to_rational_matrix(&l.gram)).expect("positive definite lattices are nondegenerate")
}

/// Whether a rational vector lies in the dual lattice.
pub fn in_dual(l: &EvenLattice, x: &[Rational]) -> bool {
    l.gram_apply(x).iter().all(Rational::is_integer)
}

/// A finite abelian group `d₁ ⊕ … ⊕ d_k` with `d_i | d_{i+1}`, realized as a
/// quotient `M*/M` by rational lifts of its generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    pub invariant_factors: Vec<i64>,
    pub generator_lifts: Vec<QVec>,
}

impl FiniteAbelianGroup {
    pub fn order(&self) -> i64 {
        self.invariant_factors.iter().product()
    }

    /// All elements as reduced representatives (fractional parts), sorted colex.
    pub fn elements(&self, dim: usize) -> Vec<QVec> {
        let mut out = vec![vec![Rational::zero(); dim]];
        for (g, &d) in self.generator_lifts.iter().zip(&self.invariant_factors) {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for base in &out {
                for k in 0..d {
                    let v: QVec = base
                        .iter()
                        .zip(g)
                        .map(|(b, gi)| b + &(gi * &Rational::from_int(k)))
                        .collect();
                    next.push(fract_vec(&v));
                }
            }
            out = next;
        }
        out.sort_by(|a, b| colex_cmp(a, b));
        out.dedup();
        out
    }
}

/// Discriminant group `L*/L` with generator lifts in `L*`, in the coordinates
/// of the basis of `L`.
pub fn discriminant_group(l: &EvenLattice) -> FiniteAbelianGroup {
    let n = l.rank();
    let (_, diag, v) = smith_normal_form(&l.gram);
    let mut factors = Vec::new();
    let mut lifts = Vec::new();
    for (i, &d) in diag.iter().enumerate() {
        if d > 1 {
            let g: QVec = (0..n).map(|r| Rational::new(v[r][i] as i64, d as i64)).collect();
            factors.push(d as i64);
            lifts.push(canonical_cyclic_generator(&g, d as i64));
        }
    }
    FiniteAbelianGroup { invariant_factors: factors, generator_lifts: lifts }
}

/// Among the generators `k·g` with `gcd(k, d) = 1`, the colex-smallest reduced one.
fn canonical_cyclic_generator(g: &[Rational], d: i64) -> QVec {
    let mut best: Option<QVec> = None;
    for k in 1..d {
        if k.gcd(&d) != 1 {
            continue;
        }
        let cand = fract_vec(&scale_vec(g, &Rational::from_int(k)));
        if best.as_ref().is_none_or(|b| colex_cmp(&cand, b) == Ordering::Less) {
            best = Some(cand);
        }
    }
    best.unwrap_or_else(|| fract_vec(g))
}

/// A sublattice of `Z^n` (coordinates in an ambient basis) in lower Hermite form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sublattice {
    dim: usize,
    basis: IntMat,
}

impl Sublattice {
    pub fn from_generators(dim: usize, gens: &[Vec<i64>]) -> Self {
        for g in gens {
            assert_eq!(g.len(), dim, "generator length must equal ambient dimension");
        }
        Sublattice { dim, basis: hnf_lower(gens, dim) }
    }

    pub fn full(dim: usize) -> Self {
        Self::from_generators(dim, &identity(dim))
    }

    pub fn zero(dim: usize) -> Self {
        Sublattice { dim, basis: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Basis rows in canonical lower Hermite form, ordered by pivot column.
    pub fn basis(&self) -> &IntMat {
        &self.basis
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.dim
    }

    fn pivot(row: &[i64]) -> usize {
        row.iter().rposition(|&x| x != 0).expect("basis rows are nonzero")
    }

    /// Index in the ambient `Z^n`; an error for rank-deficient sublattices.
    pub fn index(&self) -> Result<i64> {
        if !self.is_full_rank() {
            return Err(Error::Domain(format!(
                "sublattice of rank {} in dimension {} has infinite index",
                self.rank(),
                self.dim
            )));
        }
        Ok(self.basis.iter().map(|r| r[Self::pivot(r)]).product())
    }

    /// Canonical representative of `v` modulo this sublattice.
    pub fn reduce(&self, v: &[Rational]) -> QVec {
        let mut v = v.to_vec();
        for row in self.basis.iter().rev() {
            let p = Self::pivot(row);
            let t = Rational::from_bigint((&v[p] / &Rational::from_int(row[p])).floor());
            if !t.is_zero() {
                for (vi, &ri) in v.iter_mut().zip(row) {
                    *vi -= &(&t * &Rational::from_int(ri));
                }
            }
        }
        v
    }

    pub fn reduce_int(&self, v: &[i64]) -> Vec<i64> {
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for row in self.basis.iter().rev() {
            let p = Self::pivot(row);
            let t = v[p].div_euclid(row[p] as i128);
            if t != 0 {
                for (vi, &ri) in v.iter_mut().zip(row) {
                    *vi -= t * ri as i128;
                }
            }
        }
        v.into_iter().map(|x| x as i64).collect()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Rational::is_zero)
    }

    pub fn contains_int(&self, v: &[i64]) -> bool {
        self.reduce_int(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the Hermite basis, if `v` lies in the rational span.
    pub fn coords_of(&self, v: &[Rational]) -> Option<QVec> {
        let mut v = v.to_vec();
        let mut c = vec![Rational::zero(); self.rank()];
        for (k, row) in self.basis.iter().enumerate().rev() {
            let p = Self::pivot(row);
            let t = &v[p] / &Rational::from_int(row[p]);
            if !t.is_zero() {
                for (vi, &ri) in v.iter_mut().zip(row) {
                    *vi -= &(&t * &Rational::from_int(ri));
                }
            }
            c[k] = t;
        }
        if v.iter().all(Rational::is_zero) {
            Some(c)
        } else {
            None
        }
    }

    pub fn contains_sublattice(&self, other: &Sublattice) -> bool {
        other.basis.iter().all(|r| self.contains_int(r))
    }

    /// Box representatives of `Z^n / self`, sorted colex.
    pub fn transversal(&self) -> Result<Vec<Vec<i64>>> {
        self.index()?;
        let mut bounds = vec![1i64; self.dim];
        for row in &self.basis {
            let p = Self::pivot(row);
            bounds[p] = row[p];
        }
        let mut out: Vec<Vec<i64>> = vec![Vec::new()];
        for &b in &bounds {
            out = out
                .into_iter()
                .flat_map(|pre| {
                    (0..b).map(move |x| {
                        let mut v = pre.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        out.sort_by(|a, b| colex_cmp(a, b));
        Ok(out)
    }

    /// Representatives of `sup / self` for a sublattice `self ⊆ sup` of finite
    /// index, as canonical reduced integer vectors in ambient coordinates.
    pub fn transversal_in(&self, sup: &Sublattice) -> Result<Vec<Vec<i64>>> {
        if !sup.contains_sublattice(self) || self.rank() != sup.rank() {
            return Err(Error::Domain("not a finite-index sublattice".into()));
        }
        // Work in the coordinates of sup's basis.
        let in_sup: Vec<Vec<i64>> = self
            .basis
            .iter()
            .map(|r| {
                sup.coords_of(&to_rational_vec(r))
                    .expect("contained")
                    .iter()
                    .map(|x| x.to_i64().expect("integral"))
                    .collect()
            })
            .collect();
        let rel = Sublattice::from_generators(sup.rank(), &in_sup);
        let mut reps: Vec<Vec<i64>> = rel
            .transversal()?
            .into_iter()
            .map(|c| self.reduce_int(&combine_rows(&sup.basis, &c, self.dim)))
            .collect();
        reps.sort_by(|a, b| colex_cmp(a, b));
        Ok(reps)
    }
}

fn combine_rows(rows: &[Vec<i64>], c: &[i64], dim: usize) -> Vec<i64> {
    let mut v = vec![0i64; dim];
    for (row, &ci) in rows.iter().zip(c) {
        for (vi, &ri) in v.iter_mut().zip(row) {
            *vi += ci * ri;
        }
    }
    v
}

/// `[ambient : sub]` for a full-rank sublattice of `Z^n`.
pub fn sublattice_index(sub: &Sublattice) -> Result<i64> {
    sub.index()
}

/// Saturated integer kernel `{v ∈ Z^n : M·v = 0}` of a rational matrix `M`
/// with `n` columns.
pub fn saturated_kernel(m: &[QVec], n: usize) -> Sublattice {
    let rows: Vec<Vec<i128>> = m.iter().map(|r| clear_denominators(r)).collect();
    let r = rows.len();
    // Augmented [Mᵀ | I]; row operations preserve unimodularity of the right block.
    let mut aug: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            let mut row: Vec<i128> = rows.iter().map(|mr| mr[i]).collect();
            row.extend((0..n).map(|j| i128::from(i == j)));
            row
        })
        .collect();
    let rank = hermite_upper(&mut aug, r);
    let kernel: Vec<Vec<i64>> = aug[rank..]
        .iter()
        .map(|row| row[r..].iter().map(|&x| narrow(x)).collect())
        .collect();
    Sublattice::from_generators(n, &kernel)
}

/// Integer vectors of the coset `rep + Z^n` with norm at most `max_norm`,
/// sorted by norm then colex.
pub fn enumerate_coset_vectors(l: &EvenLattice, rep: &[Rational], max_norm: &Rational) -> Vec<QVec> {
    let mut out: Vec<(SmallRat, QVec)> = Vec::new();
    for_each_coset_vector(l, rep, max_norm, |z, nrm| {
        let v: QVec = rep.iter().zip(z).map(|(r, &zi)| r + &Rational::from_int(zi)).collect();
        out.push((nrm, v));
    });
    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| colex_cmp(&a.1, &b.1)));
    out.into_iter().map(|(_, v)| v).collect()
}

/// Calls `f(z, |rep + z|²)` for each integer `z` with `|rep + z|² ≤ max_norm`.
///
/// Uses the decomposition `|x|² = Σ q_ii (x_i + Σ_{j>i} q_ij x_j)²` computed
/// over the rationals; coordinate ranges are located with a floating-point
/// estimate and every candidate is then accepted or rejected exactly.
pub fn for_each_coset_vector<F: FnMut(&[i64], SmallRat)>(
    l: &EvenLattice,
    rep: &[Rational],
    max_norm: &Rational,
    mut f: F,
) {
    let n = l.rank();
    assert_eq!(rep.len(), n, "coset representative has wrong length");
    let bound = to_small(max_norm);
    if bound < SmallRat::zero() {
        return;
    }
    if n == 0 {
        f(&[], SmallRat::zero());
        return;
    }
    let q = quadratic_decomposition(l);
    let rep: Vec<SmallRat> = rep.iter().map(to_small).collect();
    let mut z = vec![0i64; n];
    let mut x = vec![SmallRat::zero(); n];
    recurse(n - 1, &q, &rep, bound, &mut z, &mut x, &bound, &mut f);
}

#[allow(clippy::too_many_arguments)]
fn recurse<F: FnMut(&[i64], SmallRat)>(
    i: usize,
    q: &[Vec<SmallRat>],
    rep: &[SmallRat],
    remaining: SmallRat,
    z: &mut Vec<i64>,
    x: &mut Vec<SmallRat>,
    total: &SmallRat,
    f: &mut F,
) {
    let n = q.len();
    let mut c = SmallRat::zero();
    for j in i + 1..n {
        c += q[i][j] * x[j];
    }
    let qi = q[i][i];
    let center = -(rep[i] + c);
    let radius = (ratio_f64(&remaining) / ratio_f64(&qi)).max(0.0).sqrt();
    let cf = ratio_f64(&center);
    let lo = (cf - radius).floor() as i64 - 1;
    let hi = (cf + radius).ceil() as i64 + 1;
    for zi in lo..=hi {
        let xi = rep[i] + SmallRat::from_integer(zi as i128);
        let t = xi + c;
        let used = qi * t * t;
        if used > remaining {
            continue;
        }
        z[i] = zi;
        x[i] = xi;
        let rest = remaining - used;
        if i == 0 {
            f(z, *total - rest);
        } else {
            recurse(i - 1, q, rep, rest, z, x, total, f);
        }
    }
}

/// `q_ii`, `q_ij` (j > i) with `|x|² = Σ q_ii (x_i + Σ_{j>i} q_ij x_j)²`.
fn quadratic_decomposition(l: &EvenLattice) -> Vec<Vec<SmallRat>> {
    let n = l.rank();
    let mut q: Vec<Vec<SmallRat>> = l
        .gram()
        .iter()
        .map(|r| r.iter().map(|&x| SmallRat::from_integer(x as i128)).collect())
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j];
            q[i][j] = q[i][j] / q[i][i];
        }
        for k in i + 1..n {
            for m in k..n {
                let d = q[k][i] * q[i][m];
                q[k][m] -= d;
            }
        }
    }
    q
}

fn ratio_f64(r: &SmallRat) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn to_small(r: &Rational) -> SmallRat {
    SmallRat::new(
        r.numer().to_i128().expect("numerator fits in i128"),
        r.denom().to_i128().expect("denominator fits in i128"),
    )
}

pub fn from_small(r: &SmallRat) -> Rational {
    Rational::from_big(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

// ---------------------------------------------------------------------------
// Matrix helpers.

pub fn identity(n: usize) -> IntMat {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> IntMat {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|r| {
            (0..cols)
                .map(|j| (0..inner).map(|k| r[k] as i128 * b[k][j] as i128).sum::<i128>() as i64)
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    a.iter().map(|r| r.iter().zip(v).map(|(&x, &y)| x * y).sum()).collect()
}

pub fn mat_vec_rational(a: &[Vec<i64>], v: &[Rational]) -> QVec {
    a.iter()
        .map(|r| {
            r.iter()
                .zip(v)
                .fold(Rational::zero(), |acc, (&x, y)| acc + &Rational::from_int(x) * y)
        })
        .collect()
}

pub fn qmat_vec(a: &[QVec], v: &[Rational]) -> QVec {
    a.iter().map(|r| dot(r, v)).collect()
}

pub fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(y).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

pub fn dot_int(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

pub fn to_rational_vec(v: &[i64]) -> QVec {
    v.iter().map(|&x| Rational::from_int(x)).collect()
}

pub fn to_rational_matrix(m: &[Vec<i64>]) -> Vec<QVec> {
    m.iter().map(|r| to_rational_vec(r)).collect()
}

pub fn scale_vec(v: &[Rational], s: &Rational) -> QVec {
    v.iter().map(|x| x * s).collect()
}

pub fn add_vec(a: &[Rational], b: &[Rational]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg_vec(a: &[Rational]) -> QVec {
    a.iter().map(|x| -x).collect()
}

/// Componentwise fractional parts, i.e. reduction modulo `Z^n`.
pub fn fract_vec(v: &[Rational]) -> QVec {
    v.iter().map(Rational::fract_pos).collect()
}

/// Integer vector if every coordinate is integral.
pub fn integral_vec(v: &[Rational]) -> Option<Vec<i64>> {
    v.iter().map(Rational::to_i64).collect()
}

/// Colexicographic comparison: the last coordinate is most significant.
pub fn colex_cmp<T: Ord>(a: &[T], b: &[T]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Exact determinant by fraction-free elimination.
pub fn det_int(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Gauss-Jordan inverse over the rationals.
pub fn inverse_rational(m: &[QVec]) -> Option<Vec<QVec>> {
    let n = m.len();
    let mut a: Vec<QVec> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| Rational::from_int(i64::from(i == j))));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(p, c);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..2 * n {
                    let d = &f * &a[c][j];
                    a[i][j] -= &d;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Integer inverse of a unimodular matrix.
pub fn inverse_unimodular(m: &[Vec<i64>]) -> Option<IntMat> {
    let inv = inverse_rational(&to_rational_matrix(m))?;
    inv.iter().map(|r| integral_vec(r)).collect()
}

fn clear_denominators(r: &[Rational]) -> Vec<i128> {
    let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    r.iter()
        .map(|x| (x.numer() * (&l / x.denom())).to_i128().expect("entry fits in i128"))
        .collect()
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("integer matrix entry overflowed i64")
}

/// Upper Hermite form on the first `cols` columns (pivot = first nonzero
/// column, positive, entries above reduced into `[0, pivot)`); row operations
/// act on whole rows. Returns the rank over those columns.
fn hermite_upper(rows: &mut [Vec<i128>], cols: usize) -> usize {
    let m = rows.len();
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..m {
                if rows[i][c] != 0 && best.is_none_or(|b| rows[i][c].abs() < rows[b][c].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            rows.swap(r, b);
            let mut done = true;
            for i in r + 1..m {
                if rows[i][c] != 0 {
                    let q = rows[i][c] / rows[r][c];
                    let (head, tail) = rows.split_at_mut(i);
                    for (x, y) in tail[0].iter_mut().zip(&head[r]) {
                        *x -= q * y;
                    }
                    if tail[0][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if rows[r][c] == 0 {
            continue;
        }
        if rows[r][c] < 0 {
            for x in rows[r].iter_mut() {
                *x = -*x;
            }
        }
        for i in 0..r {
            let q = rows[i][c].div_euclid(rows[r][c]);
            if q != 0 {
                let (head, tail) = rows.split_at_mut(r);
                for (x, y) in head[i].iter_mut().zip(&tail[0]) {
                    *x -= q * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Lower Hermite normal form of the lattice generated by `gens`; rows are
/// returned in increasing pivot order.
pub fn hnf_lower(gens: &[Vec<i64>], dim: usize) -> IntMat {
    let mut rows: Vec<Vec<i128>> = gens
        .iter()
        .map(|g| g.iter().rev().map(|&x| x as i128).collect())
        .collect();
    let rank = hermite_upper(&mut rows, dim);
    let mut out: IntMat = rows[..rank]
        .iter()
        .map(|r| r.iter().rev().map(|&x| narrow(x)).collect())
        .collect();
    out.reverse();
    out
}

/// For an integer `p × n` matrix `F`, integer vectors `g_1, …, g_r` and the
/// images `h_j = F g_j`, where the `h_j` form a basis of `F·Z^n` in upper
/// Hermite form, followed by a basis of `ker F ∩ Z^n`.
pub fn column_split(f: &[Vec<i64>], n: usize) -> (IntMat, IntMat, IntMat) {
    let p = f.len();
    let mut rows: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            let mut r: Vec<i128> = (0..p).map(|k| f[k][i] as i128).collect();
            r.extend((0..n).map(|j| i128::from(i == j)));
            r
        })
        .collect();
    let rank = hermite_upper(&mut rows, p);
    let lifts = rows[..rank].iter().map(|r| r[p..].iter().map(|&x| narrow(x)).collect()).collect();
    let images = rows[..rank].iter().map(|r| r[..p].iter().map(|&x| narrow(x)).collect()).collect();
    let kernel = rows[rank..].iter().map(|r| r[p..].iter().map(|&x| narrow(x)).collect()).collect();
    (lifts, images, kernel)
}

/// Smith normal form `U·A·V = D` for a square integer matrix. Returns
/// `(U, diagonal of D, V)` with nonnegative diagonal entries dividing each other.
pub fn smith_normal_form(a: &[Vec<i64>]) -> (Vec<Vec<i128>>, Vec<i128>, Vec<Vec<i128>>) {
    let n = a.len();
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let eye = |k: usize| -> Vec<Vec<i128>> {
        (0..k).map(|i| (0..k).map(|j| i128::from(i == j)).collect()).collect()
    };
    let mut u = eye(n);
    let mut v = eye(n);
    for t in 0..n {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            m.swap(t, bi);
            u.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
            for row in v.iter_mut() {
                row.swap(t, bj);
            }
            let mut clean = true;
            for i in t + 1..n {
                let q = m[i][t] / m[t][t];
                if q != 0 {
                    for j in 0..n {
                        m[i][j] -= q * m[t][j];
                        u[i][j] -= q * u[t][j];
                    }
                }
                if m[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let q = m[t][j] / m[t][t];
                if q != 0 {
                    for i in 0..n {
                        m[i][j] -= q * m[i][t];
                        v[i][j] -= q * v[i][t];
                    }
                }
                if m[t][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..n).flat_map(|i| (t + 1..n).map(move |j| (i, j))).find(|&(i, j)| m[i][j] % m[t][t] != 0);
            match bad {
                Some((i, _)) => {
                    for j in 0..n {
                        m[t][j] += m[i][j];
                        u[t][j] += u[i][j];
                    }
                }
                None => break,
            }
        }
        if m[t][t] < 0 {
            for j in 0..n {
                m[t][j] = -m[t][j];
                u[t][j] = -u[t][j];
            }
        }
    }
    let diag = (0..n).map(|i| m[i][i]).collect();
    (u, diag, v)
}

/// Rank of an integer matrix over `F₂`, and a basis of its row space.
pub fn f2_row_basis(rows: &[Vec<i64>]) -> Vec<Vec<u8>> {
    let mut basis: Vec<Vec<u8>> = Vec::new();
    for r in rows {
        let mut v: Vec<u8> = r.iter().map(|&x| x.rem_euclid(2) as u8).collect();
        for b in &basis {
            let p = b.iter().position(|&x| x == 1).expect("nonzero");
            if v[p] == 1 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
        }
        if v.contains(&1) {
            // Keep the basis in reduced form so pivots stay unique.
            let p = v.iter().position(|&x| x == 1).unwrap();
            for b in basis.iter_mut() {
                if b[p] == 1 {
                    for (x, y) in b.iter_mut().zip(&v) {
                        *x ^= y;
                    }
                }
            }
            basis.push(v);
        }
    }
    basis
}

/// Basis of `{x ∈ F₂^n : A x = 0}` for an integer matrix `A` read mod 2.
pub fn f2_kernel(a: &[Vec<i64>], n: usize) -> Vec<Vec<u8>> {
    let mut rows: Vec<Vec<u8>> = a.iter().map(|r| r.iter().map(|&x| x.rem_euclid(2) as u8).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] == 1) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] == 1 {
                let src = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&src) {
                    *x ^= y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u8; n];
            v[fc] = 1;
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = rows[k][fc];
            }
            v
        })
        .collect()
}

/// Solves `x = Σ c_i b_i` over `F₂` for `x` in the span of the basis `b`.
pub fn f2_solve(basis: &[Vec<u8>], x: &[u8]) -> Option<Vec<u8>> {
    let n = x.len();
    let k = basis.len();
    // Columns are basis vectors; augmented with x.
    let mut rows: Vec<Vec<u8>> = (0..n)
        .map(|i| {
            let mut r: Vec<u8> = basis.iter().map(|b| b[i]).collect();
            r.push(x[i]);
            r
        })
        .collect();
    let mut piv = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| rows[i][c] == 1) else { continue };
        rows.swap(r, p);
        for i in 0..n {
            if i != r && rows[i][c] == 1 {
                let src = rows[r].clone();
                for (a, b) in rows[i].iter_mut().zip(&src) {
                    *a ^= b;
                }
            }
        }
        piv.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| row[k] == 1) {
        return None;
    }
    let mut c = vec![0u8; k];
    for (i, &pc) in piv.iter().enumerate() {
        c[pc] = rows[i][k];
    }
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> EvenLattice {
        EvenLattice::new(vec![vec![2, -1], vec![-1, 2]]).unwrap()
    }

    #[test]
    fn hnf_is_lower_and_reduced() {
        let s = Sublattice::from_generators(3, &[vec![1, 0, 1], vec![0, 1, 0], vec![1, 0, -1]]);
        assert_eq!(s.basis(), &vec![vec![2, 0, 0], vec![0, 1, 0], vec![1, 0, 1]]);
        assert_eq!(s.index().unwrap(), 2);
    }

    #[test]
    fn snf_of_a2() {
        let (u, d, v) = smith_normal_form(a2().gram());
        assert_eq!(d, vec![1, 3]);
        let g: Vec<Vec<i128>> = a2().gram().iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let prod = |a: &Vec<Vec<i128>>, b: &Vec<Vec<i128>>| -> Vec<Vec<i128>> {
            (0..2).map(|i| (0..2).map(|j| (0..2).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
        };
        assert_eq!(prod(&prod(&u, &g), &v), vec![vec![1, 0], vec![0, 3]]);
    }

    #[test]
    fn f2_kernel_and_solve() {
        let k = f2_kernel(&[vec![1, 1, 0], vec![0, 1, 1]], 3);
        assert_eq!(k, vec![vec![1, 1, 1]]);
        assert_eq!(f2_solve(&k, &[1, 1, 1]), Some(vec![1]));
        assert_eq!(f2_solve(&k, &[1, 0, 0]), None);
    }

    #[test]
    fn enumeration_small() {
        let v = enumerate_coset_vectors(&a2(), &[Rational::zero(), Rational::zero()], &Rational::from_int(2));
        assert_eq!(v.len(), 7);
    }
}
