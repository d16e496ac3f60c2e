//! The sign cocycle `ε` and the lifting function `η`.
//!
//! `ε` is a bimultiplicative map `Q × Q → {±1}` with
//! `ε(α,β)ε(β,α) = (−1)^{(α|β)}` and `ε(α,α) = (−1)^{|α|²/2}`. It is fixed
//! by its values on basis pairs: `+1` above the diagonal, `(−1)^{(e_i|e_j)}`
//! below it, and `(−1)^{|e_i|²/2}` on it.
//!
//! `η` lifts `σ` to the twisted group algebra: `σ(e^α) = η(α) e^{σα}`. It is a
//! function on `Q/2Q` satisfying `η(α+β) ε(σα,σβ) = η(α) η(β) ε(α,β)`. The
//! ratio `f(α,β) = ε(α,β) ε(σα,σβ)` is an alternating bilinear form mod 2,
//! and `η` is the quadratic refinement of `f` that is `+1` on a chosen
//! `F₂`-basis. The basis is chosen to start inside `L`, so `η ≡ 1` on `L`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{parity_sign, Rational};
use crate::isometry::Isometry;
use crate::lattice::{
    f2_row_basis, f2_solve, integral_vec, to_rational_vec, EvenLattice, IntMat, QVec, Sublattice,
};

/// A bimultiplicative sign cocycle, stored as the set of basis pairs where it is `−1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCocycle {
    negative: Vec<Vec<bool>>,
}

impl TwoCocycle {
    /// Builds the cocycle with the upper-triangular convention from a
    /// diagonal rule `d(|e_i|²)` for the values `ε(e_i, e_i)`.
    fn from_gram(gram: &[Vec<i64>], diag: impl Fn(i64) -> bool) -> Self {
        let n = gram.len();
        let negative = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.cmp(&j) {
                        std::cmp::Ordering::Less => false,
                        std::cmp::Ordering::Greater => gram[i][j].rem_euclid(2) == 1,
                        std::cmp::Ordering::Equal => diag(gram[i][i]),
                    })
                    .collect()
            })
            .collect();
        TwoCocycle { negative }
    }

    pub fn rank(&self) -> usize {
        self.negative.len()
    }

    /// The cocycle `(a, b) ↦ ε(Σ a_i v_i, Σ b_j v_j)` for basis rows `v_i`.
    pub fn restrict(&self, basis: &[Vec<i64>]) -> TwoCocycle {
        let negative = basis
            .iter()
            .map(|a| basis.iter().map(|b| self.eval(a, b) == -1).collect())
            .collect();
        TwoCocycle { negative }
    }

    /// Values `ε(e_i, e_j)` as a ±1 matrix.
    pub fn sign_matrix(&self) -> Vec<Vec<i8>> {
        self.negative.iter().map(|r| r.iter().map(|&b| if b { -1 } else { 1 }).collect()).collect()
    }

    /// `ε(α, β)` for integer coordinate vectors.
    pub fn eval(&self, a: &[i64], b: &[i64]) -> i8 {
        let mut parity = 0i64;
        for (i, row) in self.negative.iter().enumerate() {
            if a[i] & 1 == 0 {
                continue;
            }
            for (j, &neg) in row.iter().enumerate() {
                if neg {
                    parity ^= b[j] & 1;
                }
            }
        }
        if parity == 0 {
            1
        } else {
            -1
        }
    }
}

/// The cocycle of an even lattice.
pub fn build_epsilon(l: &EvenLattice) -> TwoCocycle {
    TwoCocycle::from_gram(l.gram(), |n| (n / 2).rem_euclid(2) == 1)
}

/// `ε(α, β)`, checking that both vectors have the cocycle's rank.
pub fn epsilon_eval(eps: &TwoCocycle, a: &[i64], b: &[i64]) -> Result<i8> {
    if a.len() != eps.rank() || b.len() != eps.rank() {
        return Err(Error::Input("vector length differs from the cocycle rank".into()));
    }
    Ok(eps.eval(a, b))
}

/// A bimultiplicative cocycle on an integral overlattice `M ⊇ L`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedCocycle {
    /// Rows are the basis of `M` in the coordinates of `L`.
    pub basis: Vec<QVec>,
    pub gram: IntMat,
    pub cocycle: TwoCocycle,
    scale: i64,
    scaled: Sublattice,
}

impl ExtendedCocycle {
    /// Coordinates of a vector of `M` (given in `L` coordinates) in the basis of `M`.
    pub fn coords(&self, v: &[Rational]) -> Result<Vec<i64>> {
        let scaled: QVec = v.iter().map(|x| x * &Rational::from_int(self.scale)).collect();
        self.scaled
            .coords_of(&scaled)
            .and_then(|c| integral_vec(&c))
            .ok_or_else(|| Error::Domain("vector is not in the extended lattice".into()))
    }

    pub fn eval(&self, a: &[Rational], b: &[Rational]) -> Result<i8> {
        Ok(self.cocycle.eval(&self.coords(a)?, &self.coords(b)?))
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                acc += ai * self.gram[i][j] * bj;
            }
        }
        acc
    }
}

/// Extends the cocycle convention to `M = L + Σ Z g` for rational vectors `g`.
///
/// `M` must be integral. On basis vectors of odd norm `n` the diagonal value
/// is `(−1)^{n(n+1)/2}`.
pub fn extend_epsilon(l: &EvenLattice, extra: &[QVec]) -> Result<ExtendedCocycle> {
    let n = l.rank();
    let scale = extra
        .iter()
        .flat_map(|g| g.iter())
        .fold(num_bigint::BigInt::from(1), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let scale: i64 = num_traits::ToPrimitive::to_i64(&scale).ok_or_else(|| Error::Domain("denominator too large".into()))?;
    let mut gens: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| if i == j { scale } else { 0 }).collect()).collect();
    for g in extra {
        let v: QVec = g.iter().map(|x| x * &Rational::from_int(scale)).collect();
        gens.push(integral_vec(&v).expect("denominators cleared"));
    }
    let scaled = Sublattice::from_generators(n, &gens);
    let basis: Vec<QVec> = scaled
        .basis()
        .iter()
        .map(|r| r.iter().map(|&x| Rational::new(x, scale)).collect())
        .collect();
    let mut gram = Vec::with_capacity(n);
    for a in &basis {
        let mut row = Vec::with_capacity(n);
        for b in &basis {
            let v = crate::lattice::inner(l, a, b)?;
            row.push(v.to_i64().ok_or_else(|| {
                Error::Domain(format!("overlattice is not integral: inner product {}", v))
            })?);
        }
        gram.push(row);
    }
    let cocycle = TwoCocycle::from_gram(&gram, |m| (m * (m + 1) / 2).rem_euclid(2) == 1);
    Ok(ExtendedCocycle { basis, gram, cocycle, scale, scaled })
}

/// A quadratic refinement of `ε(α,β)ε(σα,σβ)` on `Q/2Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaFunction {
    /// Integer lifts of an `F₂`-basis of `Q/2Q` on which `η = +1`.
    pub basis: IntMat,
    basis_mod2: Vec<Vec<u8>>,
    form: Vec<Vec<i8>>,
}

impl EtaFunction {
    pub fn eval(&self, x: &[i64]) -> i8 {
        let xm: Vec<u8> = x.iter().map(|&v| v.rem_euclid(2) as u8).collect();
        let c = f2_solve(&self.basis_mod2, &xm).expect("basis spans Q/2Q");
        let support: Vec<usize> = (0..c.len()).filter(|&i| c[i] == 1).collect();
        let mut s = 1i8;
        for (k, &i) in support.iter().enumerate() {
            for &j in &support[k + 1..] {
                s *= self.form[i][j];
            }
        }
        s
    }

    /// `η` on each standard basis vector.
    pub fn standard_values(&self) -> Vec<i8> {
        let n = self.basis.len();
        (0..n).map(|i| self.eval(&(0..n).map(|j| i64::from(i == j)).collect::<Vec<_>>())).collect()
    }
}

/// `f(α,β) = ε(α,β)ε(σα,σβ)`.
pub fn eta_form(eps: &TwoCocycle, sigma: &Isometry, a: &[i64], b: &[i64]) -> i8 {
    eps.eval(a, b) * eps.eval(&sigma.apply_int(a), &sigma.apply_int(b))
}

/// Builds `η` with `η ≡ 1` on `trivial_on`, and `η = +1` on the given extra
/// vectors as far as they are independent mod 2.
///
/// Fails with a witness pair if `ε(σα,σβ) ≠ ε(α,β)` somewhere on `trivial_on`.
pub fn build_eta(
    l: &EvenLattice,
    sigma: &Isometry,
    eps: &TwoCocycle,
    trivial_on: &Sublattice,
    preferred: &[Vec<i64>],
) -> Result<EtaFunction> {
    let n = l.rank();
    let tb = trivial_on.basis();
    for a in tb {
        for b in tb {
            if eta_form(eps, sigma, a, b) != 1 {
                return Err(Error::Verification(format!(
                    "eps(sa,sb) != eps(a,b) on the trivializing lattice, witness a = {:?}, b = {:?}",
                    a, b
                )));
            }
        }
    }
    let mut basis: IntMat = Vec::new();
    let mut span: Vec<Vec<i64>> = Vec::new();
    let units: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for v in tb.iter().chain(preferred).chain(&units) {
        let mut trial = span.clone();
        trial.push(v.clone());
        if f2_row_basis(&trial).len() > f2_row_basis(&span).len() {
            span.push(v.clone());
            basis.push(v.clone());
        }
        if basis.len() == n {
            break;
        }
    }
    let basis_mod2 = basis.iter().map(|b| b.iter().map(|&x| x.rem_euclid(2) as u8).collect()).collect();
    let form = basis.iter().map(|a| basis.iter().map(|b| eta_form(eps, sigma, a, b)).collect()).collect();
    Ok(EtaFunction { basis, basis_mod2, form })
}

/// Checks `ε(α,β)ε(β,α) = (−1)^{(α|β)}` and `ε(α,α) = (−1)^{|α|²(|α|²+1)/2}`.
pub fn check_cocycle_pair(l: &EvenLattice, eps: &TwoCocycle, a: &[i64], b: &[i64]) -> Result<()> {
    let comm = eps.eval(a, b) * eps.eval(b, a);
    if comm != parity_sign(l.inner_int(a, b)) {
        return Err(Error::Verification(format!("commutator identity fails for {:?}, {:?}", a, b)));
    }
    for v in [a, b] {
        let m = l.norm_int(v) as i128;
        let expect = if (m * (m + 1) / 2).rem_euclid(2) == 0 { 1 } else { -1 };
        if eps.eval(v, v) != expect {
            return Err(Error::Verification(format!("diagonal identity fails for {:?}", v)));
        }
    }
    Ok(())
}

/// Checks the lifting identity and `η(α)η(σα) = (−1)^{(α|σα)}` on one pair.
pub fn check_eta_pair(
    l: &EvenLattice,
    sigma: &Isometry,
    eps: &TwoCocycle,
    eta: &EtaFunction,
    a: &[i64],
    b: &[i64],
) -> Result<()> {
    let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
    let (sa, sb) = (sigma.apply_int(a), sigma.apply_int(b));
    if eta.eval(&sum) * eps.eval(&sa, &sb) != eta.eval(a) * eta.eval(b) * eps.eval(a, b) {
        return Err(Error::Verification(format!("lifting identity fails for {:?}, {:?}", a, b)));
    }
    if eta.eval(a) * eta.eval(&sa) != parity_sign(l.inner_int(a, &sa)) {
        return Err(Error::Verification(format!("eta(a)eta(sa) != (-1)^(a|sa) at {:?}", a)));
    }
    let two_a: Vec<i64> = a.iter().map(|x| 2 * x).collect();
    if eta.eval(&two_a) != 1 {
        return Err(Error::Verification(format!("eta(2a) != 1 at {:?}", a)));
    }
    Ok(())
}

/// Outcome of the randomized and exhaustive property scans.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleScan {
    pub random_pairs: usize,
    pub exhaustive_pairs: usize,
    pub failures: Vec<String>,
}

/// Runs the cocycle and `η` identities on `random_pairs` random pairs with
/// coordinates in `[−5, 5]` and on every pair of `Q/2Q` representatives
/// (when the rank is at most `exhaustive_rank_limit`).
pub fn property_scan<R: Rng>(
    l: &EvenLattice,
    sigma: &Isometry,
    eps: &TwoCocycle,
    eta: &EtaFunction,
    random_pairs: usize,
    exhaustive_rank_limit: usize,
    rng: &mut R,
) -> CocycleScan {
    let n = l.rank();
    let mut failures = Vec::new();
    let mut record = |r: Result<()>| {
        if let Err(e) = r {
            if failures.len() < 10 {
                failures.push(e.to_string());
            }
        }
    };
    for _ in 0..random_pairs {
        let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
        let b: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
        record(check_cocycle_pair(l, eps, &a, &b));
        record(check_eta_pair(l, sigma, eps, eta, &a, &b));
    }
    let mut exhaustive = 0;
    if n <= exhaustive_rank_limit {
        let reps: Vec<Vec<i64>> =
            (0u64..(1 << n)).map(|m| (0..n).map(|i| ((m >> i) & 1) as i64).collect()).collect();
        for a in &reps {
            for b in &reps {
                record(check_cocycle_pair(l, eps, a, b));
                record(check_eta_pair(l, sigma, eps, eta, a, b));
                exhaustive += 1;
            }
        }
    }
    CocycleScan { random_pairs, exhaustive_pairs: exhaustive, failures }
}

/// `η` on the lattice vector `α` given as rational coordinates.
pub fn eta_rational(eta: &EtaFunction, a: &[Rational]) -> Option<i8> {
    integral_vec(a).map(|v| eta.eval(&v))
}

/// Integer coordinates as rationals; convenience for callers mixing both.
pub fn as_rational(v: &[i64]) -> QVec {
    to_rational_vec(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_conventions() {
        let a2 = EvenLattice::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        let e = build_epsilon(&a2);
        assert_eq!(e.sign_matrix(), vec![vec![-1, 1], vec![-1, -1]]);
        assert_eq!(e.eval(&[1, 0], &[1, 0]), -1);
        assert_eq!(e.eval(&[2, 0], &[0, 1]), 1);
        assert_eq!(e.eval(&[1, 0], &[0, 1]) * e.eval(&[0, 1], &[1, 0]), -1);
    }

    #[test]
    fn extension_rejects_non_integral() {
        let l = EvenLattice::new(vec![vec![6]]).unwrap();
        assert!(extend_epsilon(&l, &[vec![Rational::new(1, 2)]]).is_err());
        let l4 = EvenLattice::new(vec![vec![4]]).unwrap();
        let ext = extend_epsilon(&l4, &[vec![Rational::new(1, 2)]]).unwrap();
        let lam = vec![Rational::new(1, 2)];
        let two = vec![Rational::from_int(1)];
        assert_eq!(ext.eval(&lam, &two).unwrap(), 1);
    }
}
