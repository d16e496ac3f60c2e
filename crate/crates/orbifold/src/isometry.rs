//! Involutive isometries and the lattices they cut out.
//!
//! For an isometry `σ` with `σ² = 1` we compute the eigenlattices
//! `L± = {α : σα = ±α}`, their orthogonal sum `L`, and the sublattice
//! `Q̄ = {α : (α|σα) ∈ 2Z}`, which has index 1 or 2 in `Q`. The orbifold only
//! depends on `Q̄`, so the rest of the pipeline runs on a [`Frame`]: `Q̄` in its
//! own basis, with `L±` described inside it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::lattice::{
    self, colex_cmp, fract_vec, identity, integral_vec, inverse_rational, mat_mul, mat_vec, mat_vec_rational,
    saturated_kernel, to_rational_matrix, to_rational_vec, transpose, EvenLattice, FiniteAbelianGroup, IntMat,
    QVec, Sublattice,
};

/// An isometry of order two, acting on coordinate columns as `v ↦ S·v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isometry {
    matrix: IntMat,
}

/// Which eigenspace a projection targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Eigen {
    Plus,
    Minus,
}

impl Isometry {
    /// Checks `SᵀGS = G`, `S² = I` and `S ≠ I`.
    pub fn new(l: &EvenLattice, matrix: IntMat) -> Result<Self> {
        let n = l.rank();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidIsometry(format!("sigma must be a {}x{} matrix", n, n)));
        }
        let st = transpose(&matrix);
        if mat_mul(&mat_mul(&st, l.gram()), &matrix) != *l.gram() {
            return Err(Error::InvalidIsometry("sigma does not preserve the form (S^T G S != G)".into()));
        }
        if mat_mul(&matrix, &matrix) != identity(n) {
            return Err(Error::InvalidIsometry("sigma is not an involution (S^2 != I)".into()));
        }
        if matrix == identity(n) {
            return Err(Error::InvalidIsometry(
                "sigma is the identity, which has no twisted sector to classify".into(),
            ));
        }
        Ok(Isometry { matrix })
    }

    /// `−I`, the negation isometry.
    pub fn minus_identity(l: &EvenLattice) -> Result<Self> {
        let n = l.rank();
        let m = (0..n).map(|i| (0..n).map(|j| if i == j { -1 } else { 0 }).collect()).collect();
        Isometry::new(l, m)
    }

    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply_int(&self, v: &[i64]) -> Vec<i64> {
        mat_vec(&self.matrix, v)
    }

    pub fn apply(&self, v: &[Rational]) -> QVec {
        mat_vec_rational(&self.matrix, v)
    }

    pub fn is_minus_identity(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (0..n).all(|j| self.matrix[i][j] == if i == j { -1 } else { 0 }))
    }

    /// `−σ`, which is again an involutive isometry unless `σ = −1`.
    pub fn negate(&self, l: &EvenLattice) -> Result<Self> {
        Isometry::new(l, self.matrix.iter().map(|r| r.iter().map(|x| -x).collect()).collect())
    }
}

/// `π±v = ½(v ± σv)`.
pub fn project(sigma: &Isometry, sign: Eigen, v: &[Rational]) -> QVec {
    let sv = sigma.apply(v);
    let half = Rational::new(1, 2);
    v.iter()
        .zip(&sv)
        .map(|(a, b)| match sign {
            Eigen::Plus => &(a + b) * &half,
            Eigen::Minus => &(a - b) * &half,
        })
        .collect()
}

/// Eigenlattices and `Q̄`, all in the coordinates of `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitData {
    pub l_plus: Sublattice,
    pub l_minus: Sublattice,
    pub l: Sublattice,
    pub q_bar: Sublattice,
    pub q_bar_index: i64,
    pub l_index: i64,
}

/// Computes `L±`, `L` and `Q̄` for `(Q, σ)`.
pub fn analyze(q: &EvenLattice, sigma: &Isometry) -> Result<SplitData> {
    let n = q.rank();
    if sigma.rank() != n {
        return Err(Error::InvalidIsometry("sigma rank differs from lattice rank".into()));
    }
    let shifted = |c: i64| -> Vec<QVec> {
        let m: IntMat = (0..n)
            .map(|i| (0..n).map(|j| sigma.matrix[i][j] - if i == j { c } else { 0 }).collect())
            .collect();
        to_rational_matrix(&m)
    };
    let l_plus = saturated_kernel(&shifted(1), n);
    let l_minus = saturated_kernel(&shifted(-1), n);
    let mut gens = l_plus.basis().clone();
    gens.extend(l_minus.basis().iter().cloned());
    let l = Sublattice::from_generators(n, &gens);

    // (α|σα) mod 2 is linear in α, with values w_i on the basis.
    let gs = mat_mul(q.gram(), &sigma.matrix);
    let w: Vec<i64> = (0..n).map(|i| gs[i][i].rem_euclid(2)).collect();
    let q_bar = match w.iter().position(|&x| x == 1) {
        None => Sublattice::full(n),
        Some(j) => {
            let unit = |i: usize| -> Vec<i64> { (0..n).map(|k| i64::from(k == i)).collect() };
            let mut g = Vec::new();
            for i in 0..n {
                if w[i] == 0 {
                    g.push(unit(i));
                } else if i == j {
                    g.push(unit(j).iter().map(|x| 2 * x).collect());
                } else {
                    g.push(unit(i).iter().zip(unit(j)).map(|(a, b)| a + b).collect());
                }
            }
            Sublattice::from_generators(n, &g)
        }
    };
    let q_bar_index = q_bar.index()?;
    if !(q_bar_index == 1 || q_bar_index == 2) {
        return Err(Error::Verification(format!("[Q : Q-bar] = {} is not 1 or 2", q_bar_index)));
    }
    if !q_bar.contains_sublattice(&l) {
        return Err(Error::Verification("L is not contained in Q-bar".into()));
    }
    let l_index = l.index()?;
    Ok(SplitData { l_plus, l_minus, l, q_bar, q_bar_index, l_index })
}

/// Whether `v` pairs integrally with every basis vector of `sub`.
pub fn dual_membership(q: &EvenLattice, sub: &Sublattice, v: &[Rational]) -> bool {
    let gv = q.gram_apply(v);
    sub.basis().iter().all(|b| lattice::dot(&to_rational_vec(b), &gv).is_integer())
}

/// The permutation induced by `σ` on a discriminant group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantAction {
    pub elements: Vec<QVec>,
    pub permutation: Vec<usize>,
    pub fixed: Vec<usize>,
    pub orbits: Vec<(usize, usize)>,
}

/// Action of `σ` on `L*/L` for a `σ`-stable lattice given in its own basis.
pub fn discriminant_action(
    l: &EvenLattice,
    sigma: &Isometry,
    d: &FiniteAbelianGroup,
) -> Result<DiscriminantAction> {
    let elements = d.elements(l.rank());
    let mut permutation = Vec::with_capacity(elements.len());
    for e in &elements {
        let img = fract_vec(&sigma.apply(e));
        let k = elements
            .iter()
            .position(|x| *x == img)
            .ok_or_else(|| Error::InvalidIsometry("sigma does not stabilize the lattice".into()))?;
        permutation.push(k);
    }
    let mut fixed = Vec::new();
    let mut orbits = Vec::new();
    for (i, &j) in permutation.iter().enumerate() {
        if permutation[j] != i {
            return Err(Error::Verification("induced action is not an involution".into()));
        }
        if i == j {
            fixed.push(i);
        } else if i < j {
            orbits.push((i, j));
        }
    }
    Ok(DiscriminantAction { elements, permutation, fixed, orbits })
}

/// Checks that `(α|σα)` is even exactly when `|π₊α|²` (equivalently
/// `|π₋α|²`) is an integer, for every `α` in a set of representatives of
/// `Q/2Q`. Returns the number of classes checked.
pub fn parity_equivalence_scan(q: &EvenLattice, sigma: &Isometry) -> Result<usize> {
    let n = q.rank();
    let mut count = 0;
    for mask in 0u64..(1u64 << n) {
        let a: Vec<i64> = (0..n).map(|i| ((mask >> i) & 1) as i64).collect();
        let even = q.inner_int(&a, &sigma.apply_int(&a)).rem_euclid(2) == 0;
        let av = to_rational_vec(&a);
        let np = lattice::norm(q, &project(sigma, Eigen::Plus, &av));
        let nm = lattice::norm(q, &project(sigma, Eigen::Minus, &av));
        if even != np.is_integer() || even != nm.is_integer() {
            return Err(Error::Verification(format!(
                "parity equivalence fails at {:?}: (a|sa) even = {}, |a+|^2 = {}, |a-|^2 = {}",
                a, even, np, nm
            )));
        }
        // |α±|² ≡ ½(α|σα) mod Z.
        let half = Rational::new(q.inner_int(&a, &sigma.apply_int(&a)), 2);
        if !(&np - &half).is_integer() {
            return Err(Error::Verification(format!("|a+|^2 - (a|sa)/2 not integral at {:?}", a)));
        }
        count += 1;
    }
    Ok(count)
}

/// `Q̄` in its own basis, with `σ` restricted and `L±` described inside it.
///
/// Coordinates called "W" below are coordinates in the Hermite basis of `Q̄`.
/// Vectors of `L₊` and `L₋` (and their duals) are written in the Hermite bases
/// of those lattices.
#[derive(Clone, Debug)]
pub struct Frame {
    pub ambient: EvenLattice,
    pub ambient_sigma: Isometry,
    pub split: SplitData,
    /// Rows are the basis of `Q̄` in the coordinates of `Q`.
    pub basis: IntMat,
    pub lattice: EvenLattice,
    pub sigma: Isometry,
    /// Rows are the basis of `L₊` in W coordinates.
    pub plus_basis: IntMat,
    /// Rows are the basis of `L₋` in W coordinates.
    pub minus_basis: IntMat,
    pub l_plus: EvenLattice,
    pub l_minus: EvenLattice,
    /// `L = L₊ ⊕ L₋` in W coordinates.
    pub l: Sublattice,
    plus_gram_inv: Vec<QVec>,
    minus_gram_inv: Vec<QVec>,
}

impl Frame {
    pub fn new(q: &EvenLattice, sigma: &Isometry) -> Result<Frame> {
        let split = analyze(q, sigma)?;
        let basis = split.q_bar.basis().clone();
        let lattice = q.sublattice_lattice(&basis)?;
        let n = q.rank();
        // S_W = (Bᵀ)⁻¹ S Bᵀ.
        let bt = transpose(&basis);
        let bt_inv = inverse_rational(&to_rational_matrix(&bt))
            .ok_or_else(|| Error::Verification("Q-bar basis is singular".into()))?;
        let sbt = to_rational_matrix(&mat_mul(sigma.matrix(), &bt));
        let sw: Option<IntMat> = (0..n)
            .map(|i| {
                let row: QVec = (0..n)
                    .map(|j| {
                        (0..n).fold(Rational::zero(), |acc, k| acc + &bt_inv[i][k] * &sbt[k][j])
                    })
                    .collect();
                integral_vec(&row)
            })
            .collect();
        let sw = sw.ok_or_else(|| Error::Verification("sigma does not preserve Q-bar".into()))?;
        let wsigma = Isometry::new(&lattice, sw)?;
        let local = analyze(&lattice, &wsigma)?;
        if local.q_bar_index != 1 {
            return Err(Error::Verification("(a|sa) is not even on Q-bar".into()));
        }
        let plus_basis = local.l_plus.basis().clone();
        let minus_basis = local.l_minus.basis().clone();
        let l_plus = if plus_basis.is_empty() { EvenLattice::zero() } else { lattice.sublattice_lattice(&plus_basis)? };
        let l_minus =
            if minus_basis.is_empty() { EvenLattice::zero() } else { lattice.sublattice_lattice(&minus_basis)? };
        let plus_gram_inv = lattice::dual_basis(&l_plus);
        let minus_gram_inv = lattice::dual_basis(&l_minus);
        Ok(Frame {
            ambient: q.clone(),
            ambient_sigma: sigma.clone(),
            split,
            basis,
            lattice,
            sigma: wsigma,
            plus_basis,
            minus_basis,
            l_plus,
            l_minus,
            l: local.l,
            plus_gram_inv,
            minus_gram_inv,
        })
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn plus_rank(&self) -> usize {
        self.plus_basis.len()
    }

    pub fn minus_rank(&self) -> usize {
        self.minus_basis.len()
    }

    /// Whether `Q̄` is a proper sublattice of `Q`.
    pub fn replaced(&self) -> bool {
        self.split.q_bar_index != 1
    }

    /// W coordinates to `Q` coordinates.
    pub fn to_ambient(&self, x: &[Rational]) -> QVec {
        let n = self.ambient.rank();
        (0..n)
            .map(|j| {
                self.basis
                    .iter()
                    .zip(x)
                    .fold(Rational::zero(), |acc, (row, xi)| acc + &Rational::from_int(row[j]) * xi)
            })
            .collect()
    }

    /// `Q` coordinates of a vector in `Q̄ ⊗ Q` to W coordinates.
    pub fn from_ambient(&self, x: &[Rational]) -> Option<QVec> {
        self.split.q_bar.coords_of(x)
    }

    /// Coordinates of `π₊x` in the basis of `L₊`, for `x` in W coordinates.
    pub fn plus_coords(&self, x: &[Rational]) -> QVec {
        let f: QVec = self
            .plus_basis
            .iter()
            .map(|b| lattice::inner(&self.lattice, &to_rational_vec(b), x).expect("dims"))
            .collect();
        lattice::qmat_vec(&self.plus_gram_inv, &f)
    }

    /// Coordinates of `π₋x` in the basis of `L₋`, for `x` in W coordinates.
    pub fn minus_coords(&self, x: &[Rational]) -> QVec {
        let f: QVec = self
            .minus_basis
            .iter()
            .map(|b| lattice::inner(&self.lattice, &to_rational_vec(b), x).expect("dims"))
            .collect();
        lattice::qmat_vec(&self.minus_gram_inv, &f)
    }

    /// `L₊` coordinates to W coordinates.
    pub fn plus_to_w(&self, c: &[Rational]) -> QVec {
        combine(&self.plus_basis, c, self.rank())
    }

    /// `L₋` coordinates to W coordinates.
    pub fn minus_to_w(&self, c: &[Rational]) -> QVec {
        combine(&self.minus_basis, c, self.rank())
    }

    pub fn project(&self, sign: Eigen, x: &[Rational]) -> QVec {
        project(&self.sigma, sign, x)
    }

    /// Representatives of `Q̄/L` in W coordinates, sorted colex.
    pub fn transversal(&self) -> Vec<Vec<i64>> {
        self.l.transversal().expect("L has full rank in Q-bar")
    }

    /// Representatives of `Q/L` in the coordinates of `Q`.
    pub fn ambient_transversal(&self) -> Vec<Vec<i64>> {
        let mut t = self.split.l.transversal().expect("L has full rank in Q");
        t.sort_by(|a, b| colex_cmp(a, b));
        t
    }

    pub fn plus_gram_inverse(&self) -> &[QVec] {
        &self.plus_gram_inv
    }

    pub fn minus_gram_inverse(&self) -> &[QVec] {
        &self.minus_gram_inv
    }
}

fn combine(rows: &[Vec<i64>], c: &[Rational], dim: usize) -> QVec {
    let mut v = vec![Rational::zero(); dim];
    for (row, ci) in rows.iter().zip(c) {
        for (vi, &ri) in v.iter_mut().zip(row) {
            *vi += &(ci * &Rational::from_int(ri));
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_identity_and_non_isometries() {
        let l = EvenLattice::new(vec![vec![2]]).unwrap();
        assert!(matches!(Isometry::new(&l, vec![vec![1]]), Err(Error::InvalidIsometry(_))));
        let a2 = EvenLattice::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        assert!(Isometry::new(&a2, vec![vec![0, 1], vec![1, 0]]).is_ok());
        assert!(Isometry::new(&a2, vec![vec![1, 0], vec![0, -1]]).is_err());
    }

    #[test]
    fn a2_swap_split() {
        let a2 = EvenLattice::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        let s = Isometry::new(&a2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        let sd = analyze(&a2, &s).unwrap();
        assert_eq!(sd.l_plus.basis(), &vec![vec![1, 1]]);
        assert_eq!(sd.l_minus.basis(), &vec![vec![-1, 1]]);
        assert_eq!(sd.q_bar_index, 2);
        assert_eq!(sd.q_bar, sd.l);
    }
}
