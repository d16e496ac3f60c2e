//! The `σ = −1` sector of an even lattice `L` (in practice `L₋`).
//!
//! The irreducible `V_L^+`-modules come in three families: the two eigenspaces
//! of `V_{λ+L}` when `2λ ∈ L`, the whole of `V_{λ+L} ≅ V_{−λ+L}` when
//! `2λ ∉ L`, and the two eigenspaces of each twisted module `V_L^{T_χ}`.
//! The twisted modules are labelled by central characters `χ` of the
//! twisted-sector group. On a central element `U_α` with
//! `α ∈ 2L*∩L` such a character takes the value
//! `χ(U_α) = s(α) · i^{|α|²(|α|²+1)/2} · 2^{−|α|²}` for a sign homomorphism `s`.
//!
//! Characters are stored by their sign data: `s` is a homomorphism
//! `2L*∩L → {±1}` that is trivial on `2L`, so it is a linear functional on
//! `(2L*∩L)/2L ≅ ker(G mod 2)`. When `G ≡ 0 mod 2` there are `2^{rank}` of
//! them; in general there are `2^{rank − rank₂(G)}`.
//!
//! The formula above presumes `ε(α,β) = (−1)^{(α|β)/2}` on `2L*∩L`. For a
//! general bimultiplicative `ε` the product `δ(α,β) = ε(α,β)(−1)^{(α|β)/2}` is
//! an alternating form on `(2L*∩L)/2L`, and the value picks up the quadratic
//! refinement `q` of `δ` that is `+1` on the stored basis:
//! `χ(U_α) = s(α) q(α) i^{…} 2^{−|α|²}`. For every lattice in the catalog
//! `δ ≡ 1`.

use serde::{Deserialize, Serialize};

use crate::cocycle::{build_epsilon, extend_epsilon, TwoCocycle};
use crate::error::{Error, Result};
use crate::exactnum::{dyadic_power, i_power, parity_sign, GaussianRational, Rational};
use crate::lattice::{
    self, colex_cmp, discriminant_group, f2_kernel, f2_solve, fract_vec, in_dual, integral_vec, neg_vec,
    to_rational_vec, EvenLattice, IntMat, QVec, Sublattice,
};

/// `2L* ∩ L = {α ∈ L : (α|β) ∈ 2Z for all β ∈ L}`.
pub fn central_sign_lattice(l: &EvenLattice) -> Sublattice {
    let m = l.rank();
    let mut gens: Vec<Vec<i64>> = (0..m).map(|i| (0..m).map(|j| if i == j { 2 } else { 0 }).collect()).collect();
    gens.extend(sign_kernel_basis(l));
    Sublattice::from_generators(m, &gens)
}

/// 0/1 lifts of a basis of `ker(G mod 2)`, i.e. of `(2L*∩L)/2L`.
pub fn sign_kernel_basis(l: &EvenLattice) -> IntMat {
    f2_kernel(l.gram(), l.rank())
        .into_iter()
        .map(|v| v.into_iter().map(i64::from).collect())
        .collect()
}

/// Half the `F₂`-rank of the commutator pairing `(α|β) mod 2` on `L`.
pub fn symplectic_half_rank(l: &EvenLattice) -> usize {
    (l.rank() - sign_kernel_basis(l).len()) / 2
}

/// A central character, stored through its sign homomorphism `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CentralCharacter {
    pub gram: IntMat,
    /// 0/1 lifts of the basis of `(2L*∩L)/2L` on which the signs are given.
    pub kernel_basis: IntMat,
    /// `δ(b_i, b_j)` on the kernel basis.
    pub delta: Vec<Vec<i8>>,
    pub signs: Vec<i8>,
}

impl CentralCharacter {
    fn lattice(&self) -> EvenLattice {
        EvenLattice::new(self.gram.clone()).expect("validated on construction")
    }

    /// `s(α)` for `α ∈ 2L*∩L`.
    pub fn s(&self, alpha: &[i64]) -> Result<i8> {
        let c = self.kernel_coords(alpha)?;
        Ok(c.iter().zip(&self.signs).filter(|(&ci, _)| ci == 1).map(|(_, &s)| s).product())
    }

    /// The quadratic correction `q(α)`.
    pub fn q(&self, alpha: &[i64]) -> Result<i8> {
        let c = self.kernel_coords(alpha)?;
        let support: Vec<usize> = (0..c.len()).filter(|&i| c[i] == 1).collect();
        let mut out = 1;
        for (k, &i) in support.iter().enumerate() {
            for &j in &support[k + 1..] {
                out *= self.delta[i][j];
            }
        }
        Ok(out)
    }

    fn norm(&self, alpha: &[i64]) -> i64 {
        lattice::dot_int(alpha, &lattice::mat_vec(&self.gram, alpha))
    }

    fn kernel_coords(&self, alpha: &[i64]) -> Result<Vec<u8>> {
        if lattice::mat_vec(&self.gram, alpha).iter().any(|v| v.rem_euclid(2) != 0) {
            return Err(Error::Domain(format!("{:?} is not in 2L* ∩ L", alpha)));
        }
        let basis: Vec<Vec<u8>> =
            self.kernel_basis.iter().map(|b| b.iter().map(|&x| x as u8).collect()).collect();
        let xm: Vec<u8> = alpha.iter().map(|&x| x.rem_euclid(2) as u8).collect();
        f2_solve(&basis, &xm).ok_or_else(|| Error::Domain("not in the sign lattice".into()))
    }

    /// `T_j` with `j − 1` read in binary from the signs (`−` as 1, first sign lowest).
    pub fn index(&self) -> usize {
        1 + self
            .signs
            .iter()
            .enumerate()
            .map(|(k, &s)| if s < 0 { 1usize << k } else { 0 })
            .sum::<usize>()
    }

    pub fn label(&self) -> String {
        format!("T{}", self.index())
    }
}

/// `δ(b_i, b_j) = ε(b_i, b_j) (−1)^{(b_i|b_j)/2}` on the kernel basis.
pub fn kernel_delta(l: &EvenLattice, eps: &TwoCocycle, kernel_basis: &IntMat) -> Vec<Vec<i8>> {
    kernel_basis
        .iter()
        .map(|a| {
            kernel_basis
                .iter()
                .map(|b| eps.eval(a, b) * parity_sign(l.inner_int(a, b).div_euclid(2)))
                .collect()
        })
        .collect()
}

/// All central characters for the lattice's own cocycle, ordered by
/// [`CentralCharacter::index`].
pub fn enumerate_central_characters(l: &EvenLattice) -> Vec<CentralCharacter> {
    enumerate_central_characters_with(l, &build_epsilon(l))
}

/// All central characters relative to a given cocycle on `L`.
pub fn enumerate_central_characters_with(l: &EvenLattice, eps: &TwoCocycle) -> Vec<CentralCharacter> {
    let kernel_basis = sign_kernel_basis(l);
    let delta = kernel_delta(l, eps, &kernel_basis);
    let k = kernel_basis.len();
    (0..(1usize << k))
        .map(|mask| CentralCharacter {
            gram: l.gram().clone(),
            kernel_basis: kernel_basis.clone(),
            delta: delta.clone(),
            signs: (0..k).map(|b| if (mask >> b) & 1 == 1 { -1 } else { 1 }).collect(),
        })
        .collect()
}

/// The character with `s(α) = (−1)^{(α|μ)}` for `μ ∈ L*`.
pub fn character_from_weight(l: &EvenLattice, mu: &[Rational]) -> Result<CentralCharacter> {
    if !in_dual(l, mu) {
        return Err(Error::Domain("weight is not in the dual lattice".into()));
    }
    let template = enumerate_central_characters(l).swap_remove(0);
    let signs = template
        .kernel_basis
        .iter()
        .map(|b| {
            let v = lattice::inner(l, &to_rational_vec(b), mu).expect("dims");
            parity_sign(v.to_i64().expect("integral pairing"))
        })
        .collect();
    Ok(CentralCharacter { signs, ..template })
}

/// The character whose sign function takes the prescribed values on vectors
/// of `2L*∩L` spanning `(2L*∩L)/2L`. Errors if the values are inconsistent.
pub fn character_from_values(
    l: &EvenLattice,
    eps: &TwoCocycle,
    values: &[(Vec<i64>, i8)],
) -> Result<CentralCharacter> {
    let template = enumerate_central_characters_with(l, eps).swap_remove(0);
    let basis: Vec<Vec<u8>> = values.iter().map(|(v, _)| v.iter().map(|&x| x.rem_euclid(2) as u8).collect()).collect();
    let mut signs = Vec::with_capacity(template.kernel_basis.len());
    for b in &template.kernel_basis {
        let bm: Vec<u8> = b.iter().map(|&x| x as u8).collect();
        let c = f2_solve(&basis, &bm).ok_or_else(|| Error::Domain("values do not span the sign space".into()))?;
        signs.push(c.iter().zip(values).filter(|(&ci, _)| ci == 1).map(|(_, (_, s))| *s).product());
    }
    let chi = CentralCharacter { signs, ..template };
    for (v, s) in values {
        if chi.s(v)? != *s {
            return Err(Error::Verification(format!("sign values are not additive at {:?}", v)));
        }
    }
    Ok(chi)
}

/// `χ(U_α) = s(α) · q(α) · i^{|α|²(|α|²+1)/2} · 2^{−|α|²}`.
pub fn chi_value(chi: &CentralCharacter, alpha: &[i64]) -> Result<GaussianRational> {
    let s = chi.s(alpha)? * chi.q(alpha)?;
    let n = chi.norm(alpha);
    Ok(i_power(n * (n + 1) / 2).scale(&(dyadic_power(-n) * Rational::from_int(s as i64))))
}

/// `s(α)` recovered from a value `χ(U_α)`, given the cocycle data in `template`.
pub fn sign_from_value(template: &CentralCharacter, alpha: &[i64], value: &GaussianRational) -> Result<i8> {
    let n = template.norm(alpha);
    let q = template.q(alpha)?;
    let base = i_power(n * (n + 1) / 2).scale(&(dyadic_power(-n) * Rational::from_int(q as i64)));
    (value / &base)
        .as_sign()
        .ok_or_else(|| Error::Verification(format!("central value {} at {:?} is not ±(i^k 2^-N)", value, alpha)))
}

/// `χ^{(λ)}(U_α) = (−1)^{(α|λ)} χ(U_α)`, for `λ ∈ L*` with `2λ ∈ L`.
pub fn chi_shift(chi: &CentralCharacter, lambda: &[Rational]) -> Result<CentralCharacter> {
    let l = chi.lattice();
    check_half_lattice(&l, lambda)?;
    let signs = chi
        .kernel_basis
        .iter()
        .zip(&chi.signs)
        .map(|(b, &s)| {
            let v = lattice::inner(&l, &to_rational_vec(b), lambda).expect("dims");
            s * parity_sign(v.to_i64().expect("integral pairing"))
        })
        .collect();
    Ok(CentralCharacter { signs, ..chi.clone() })
}

fn check_half_lattice(l: &EvenLattice, lambda: &[Rational]) -> Result<Vec<i64>> {
    if lambda.len() != l.rank() {
        return Err(Error::Input("dimension mismatch".into()));
    }
    if !in_dual(l, lambda) {
        return Err(Error::Domain("shift vector is not in the dual lattice".into()));
    }
    let two: QVec = lambda.iter().map(|x| x * &Rational::from_int(2)).collect();
    integral_vec(&two).ok_or_else(|| Error::Domain("twice the shift vector is not in the lattice".into()))
}

/// `c_χ(λ) = (−1)^{(λ|2λ)} ε(λ,2λ) s(2λ)`, with `ε` extended to `Zλ + L`.
pub fn c_chi(chi: &CentralCharacter, lambda: &[Rational]) -> Result<i8> {
    let l = chi.lattice();
    let two = check_half_lattice(&l, lambda)?;
    let ext = extend_epsilon(&l, &[lambda.to_vec()])?;
    let two_q = to_rational_vec(&two);
    let pairing = lattice::inner(&l, lambda, &two_q)?;
    let p = pairing
        .to_i64()
        .ok_or_else(|| Error::Domain(format!("(l|2l) = {} is not an integer", pairing)))?;
    Ok(parity_sign(p) * ext.eval(lambda, &two_q)? * chi.s(&two)?)
}

/// `π_{λ,μ} = (−1)^{|λ|²|μ|²}`.
pub fn pi_sign(l: &EvenLattice, lambda: &[Rational], mu: &[Rational]) -> Result<i8> {
    let e = lattice::norm(l, lambda) * lattice::norm(l, mu);
    let k = e.to_i64().ok_or_else(|| Error::Domain(format!("exponent |l|^2|m|^2 = {} is not an integer", e)))?;
    Ok(parity_sign(k))
}

/// One irreducible `V_L^+`-module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MinusOneModuleTag {
    /// The whole of `V_{λ+L} ≅ V_{−λ+L}`; the representative is the colex-smaller
    /// of `±λ`. Irreducible when `2λ ∉ L`.
    UntwistedMerged { coset: QVec },
    /// `V_{λ+L}^±` with `2λ ∈ L`.
    UntwistedSplit { coset: QVec, sign: i8 },
    /// `V_L^{T_χ,±}`.
    Twisted { character: Vec<i8>, label: String, sign: i8 },
}

impl MinusOneModuleTag {
    pub fn describe(&self) -> String {
        let vec = |v: &QVec| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let pm = |s: i8| if s > 0 { "+" } else { "-" };
        match self {
            MinusOneModuleTag::UntwistedMerged { coset } => format!("V[{}]", vec(coset)),
            MinusOneModuleTag::UntwistedSplit { coset, sign } => format!("V[{}]^{}", vec(coset), pm(*sign)),
            MinusOneModuleTag::Twisted { label, sign, .. } => format!("V^{{{},{}}}", label, pm(*sign)),
        }
    }
}

/// Canonical tag for the untwisted module on the coset `μ + L`.
pub fn untwisted_tag(mu: &[Rational], sign: i8) -> MinusOneModuleTag {
    let mu = fract_vec(mu);
    let two: QVec = mu.iter().map(|x| x * &Rational::from_int(2)).collect();
    if integral_vec(&two).is_some() {
        MinusOneModuleTag::UntwistedSplit { coset: mu, sign }
    } else {
        let neg = fract_vec(&neg_vec(&mu));
        let coset = if colex_cmp(&neg, &mu) == std::cmp::Ordering::Less { neg } else { mu };
        MinusOneModuleTag::UntwistedMerged { coset }
    }
}

pub fn twisted_tag(chi: &CentralCharacter, sign: i8) -> MinusOneModuleTag {
    MinusOneModuleTag::Twisted { character: chi.signs.clone(), label: chi.label(), sign }
}

/// All irreducible `V_L^+`-modules.
pub fn classify_minus_one(l: &EvenLattice) -> Vec<MinusOneModuleTag> {
    classify_minus_one_with(l, &build_epsilon(l))
}

/// As [`classify_minus_one`], with the twisted labels taken relative to `eps`.
pub fn classify_minus_one_with(l: &EvenLattice, eps: &TwoCocycle) -> Vec<MinusOneModuleTag> {
    let d = discriminant_group(l);
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for mu in d.elements(l.rank()) {
        match untwisted_tag(&mu, 1) {
            MinusOneModuleTag::UntwistedSplit { coset, .. } => {
                out.push(MinusOneModuleTag::UntwistedSplit { coset: coset.clone(), sign: 1 });
                out.push(MinusOneModuleTag::UntwistedSplit { coset, sign: -1 });
            }
            tag @ MinusOneModuleTag::UntwistedMerged { .. } => {
                if seen.insert(tag.clone()) {
                    out.push(tag);
                }
            }
            MinusOneModuleTag::Twisted { .. } => unreachable!(),
        }
    }
    for chi in enumerate_central_characters_with(l, eps) {
        out.push(twisted_tag(&chi, 1));
        out.push(twisted_tag(&chi, -1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_values() {
        let l6 = EvenLattice::new(vec![vec![6]]).unwrap();
        let chis = enumerate_central_characters(&l6);
        assert_eq!(chis.len(), 2);
        assert_eq!(chi_value(&chis[0], &[1]).unwrap().to_string(), "i/64");
        assert_eq!(chi_value(&chis[1], &[1]).unwrap().to_string(), "-i/64");
        let l4 = EvenLattice::new(vec![vec![4]]).unwrap();
        let chis = enumerate_central_characters(&l4);
        assert_eq!(chi_value(&chis[0], &[1]).unwrap().to_string(), "-1/16");
        assert_eq!(chi_value(&chis[1], &[1]).unwrap().to_string(), "1/16");
    }

    #[test]
    fn classify_counts() {
        let l6 = EvenLattice::new(vec![vec![6]]).unwrap();
        assert_eq!(classify_minus_one(&l6).len(), 10);
        let l2 = EvenLattice::new(vec![vec![2]]).unwrap();
        assert_eq!(classify_minus_one(&l2).len(), 8);
    }
}
