//! The twisted-sector group `G_σ` of `(Q̄, σ)` and its irreducible
//! representations, which label the `σ`-twisted `V_Q̄`-modules.
//!
//! Elements are pairs `(c, α)` standing for `c·U_α`, with the product
//! `U_α U_β = ε(α,β) B_{α,β}⁻¹ U_{α+β}` where `B_{α,β} = 2^{(σα−α|β)}`.
//! The relations `C_α = η(α) U_{σα}⁻¹ U_α e^{2πi(b_α + (π₀α|h(0)))} = 1`
//! with `b_α = ½(|π₀α|² − |α|²)` cut the representations down to those with
//! a fixed `L₊`-weight class and a central character on `L₋`.
//!
//! All vectors are in W coordinates (the Hermite basis of `Q̄`), weights in
//! `L₊` coordinates, and `L₋` vectors in `L₋` coordinates.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::cocycle::{build_epsilon, build_eta, EtaFunction, TwoCocycle};
use crate::error::{Error, Result};
use crate::exactnum::{dyadic_power, quarter_root_of_unity, GaussianRational, Rational};
use crate::isometry::Frame;
use crate::lattice::{
    self, column_split, enumerate_coset_vectors, f2_row_basis, integral_vec, inverse_rational, to_rational_vec,
    IntMat, QVec, Sublattice,
};
use crate::minus_one::{
    character_from_values, chi_value, enumerate_central_characters_with, sign_from_value, sign_kernel_basis,
    symplectic_half_rank, CentralCharacter,
};

/// `c · U_α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    pub scalar: GaussianRational,
    pub vector: Vec<i64>,
}

impl GroupElement {
    pub fn unit(vector: Vec<i64>) -> Self {
        GroupElement { scalar: GaussianRational::one(), vector }
    }
}

/// `L₊*/π₀Q̄` with box representatives.
#[derive(Clone, Debug)]
pub struct WeightClasses {
    /// `π₀Q̄` in functional coordinates `f = G₊μ`.
    pub image: Sublattice,
    /// One weight per class, in `L₊` coordinates, ordered colex in `f`.
    pub reps: Vec<QVec>,
    pub invariant_factors: Vec<i64>,
}

impl WeightClasses {
    pub fn order(&self) -> usize {
        self.reps.len()
    }
}

/// `V = (2L₋*∩L₋)/(2L₋ + (1−σ)Q̄)`, the free part of the central character.
#[derive(Clone, Debug)]
pub struct FreeSignGroup {
    /// `(γ, (1−σ)γ)` with the second entries independent mod 2.
    pub image: Vec<(Vec<i64>, Vec<i64>)>,
    /// Kernel vectors completing the image to a basis.
    pub complement: IntMat,
}

impl FreeSignGroup {
    pub fn dim(&self) -> usize {
        self.complement.len()
    }
}

/// One irreducible `G_σ`-module, up to equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedModuleDescriptor {
    pub index: usize,
    /// A weight `μ₀` of the module, in `L₊` coordinates.
    pub weight: QVec,
    /// The central character of `L₋` on the `μ₀` weight space.
    pub character: CentralCharacter,
    pub free_signs: Vec<i8>,
    /// Dimension of each weight space, `2^d`.
    pub weight_space_dim: usize,
    /// Lowest conformal weight of the twisted module.
    pub ground_weight: Rational,
}

/// `G_σ` together with the data fixing its central extension.
#[derive(Clone, Debug)]
pub struct TwistedGroup {
    pub frame: Frame,
    pub eps: TwoCocycle,
    pub eta: EtaFunction,
    /// `ε` restricted to `L₋`, in `L₋` coordinates.
    pub eps_minus: TwoCocycle,
    lifts: IntMat,
    images: IntMat,
    images_inv: Vec<QVec>,
}

impl TwistedGroup {
    /// Uses the standard cocycle of `Q̄` and an `η` that is `1` on `L` where possible.
    pub fn new(frame: &Frame) -> Result<Self> {
        let eps = build_epsilon(&frame.lattice);
        let reps = frame.transversal();
        let eta = build_eta(&frame.lattice, &frame.sigma, &eps, &frame.l, &reps).or_else(|_| {
            let n = frame.rank();
            let mut preferred = frame.l.basis().clone();
            preferred.extend(reps.iter().cloned());
            build_eta(&frame.lattice, &frame.sigma, &eps, &Sublattice::zero(n), &preferred)
        })?;
        Self::with_cocycle(frame, eps, eta)
    }

    pub fn with_cocycle(frame: &Frame, eps: TwoCocycle, eta: EtaFunction) -> Result<Self> {
        let n = frame.rank();
        let f: IntMat = frame
            .plus_basis
            .iter()
            .map(|b| lattice::mat_vec(frame.lattice.gram(), b))
            .collect();
        let (lifts, images, _) = column_split(&f, n);
        let images_inv = if images.is_empty() {
            Vec::new()
        } else {
            inverse_rational(&lattice::to_rational_matrix(&images))
                .ok_or_else(|| Error::Verification("projection of Q-bar is not of full rank".into()))?
        };
        let eps_minus = eps.restrict(&frame.minus_basis);
        Ok(TwistedGroup { frame: frame.clone(), eps, eta, eps_minus, lifts, images, images_inv })
    }

    fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        self.frame.lattice.inner_int(a, b)
    }

    /// `b_α = ½(|π₀α|² − |α|²) = ¼((α|σα) − |α|²)`.
    pub fn b_alpha(&self, a: &[i64]) -> Rational {
        let sa = self.frame.sigma.apply_int(a);
        Rational::new(self.inner(a, &sa) - self.inner(a, a), 4)
    }

    /// The exponent of `B_{α,β} = 2^{(σα−α|β)}`.
    pub fn b_exponent(&self, a: &[i64], b: &[i64]) -> i64 {
        let sa = self.frame.sigma.apply_int(a);
        let d: Vec<i64> = sa.iter().zip(a).map(|(x, y)| x - y).collect();
        self.inner(&d, b)
    }

    pub fn mul(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        let e = self.b_exponent(&x.vector, &y.vector);
        let eps = self.eps.eval(&x.vector, &y.vector);
        let c = (&x.scalar * &y.scalar).scale(&(dyadic_power(-e) * Rational::from_int(eps as i64)));
        GroupElement { scalar: c, vector: x.vector.iter().zip(&y.vector).map(|(a, b)| a + b).collect() }
    }

    pub fn inv(&self, x: &GroupElement) -> GroupElement {
        let neg: Vec<i64> = x.vector.iter().map(|v| -v).collect();
        let e = self.b_exponent(&x.vector, &neg);
        let eps = self.eps.eval(&x.vector, &neg);
        let c = x.scalar.inv().scale(&(dyadic_power(e) * Rational::from_int(eps as i64)));
        GroupElement { scalar: c, vector: neg }
    }

    pub fn pow(&self, x: &GroupElement, k: i64) -> GroupElement {
        let base = if k < 0 { self.inv(x) } else { x.clone() };
        let mut out = GroupElement::unit(vec![0; x.vector.len()]);
        for _ in 0..k.unsigned_abs() {
            out = self.mul(&out, &base);
        }
        out
    }

    /// `σ̂(c·U_α) = c·η(α)·U_{σα}`.
    pub fn sigma_hat(&self, x: &GroupElement) -> GroupElement {
        GroupElement {
            scalar: x.scalar.scale(&Rational::from_int(self.eta.eval(&x.vector) as i64)),
            vector: self.frame.sigma.apply_int(&x.vector),
        }
    }

    /// `(π₀α | μ)` for `α` in W coordinates and `μ` in `L₊` coordinates.
    pub fn pairing(&self, a: &[i64], mu: &[Rational]) -> Rational {
        let p = self.frame.plus_coords(&to_rational_vec(a));
        lattice::inner(&self.frame.l_plus, &p, mu).expect("dims")
    }

    /// `e^{2πi(b_α + (π₀α|μ))}`.
    pub fn phase(&self, a: &[i64], mu: &[Rational]) -> Result<GaussianRational> {
        quarter_root_of_unity(&(self.b_alpha(a) + self.pairing(a, mu)))
    }

    /// The value of `U_{γ−σγ}` on the `μ` weight space forced by `C_γ = 1`.
    pub fn forced_value(&self, gamma: &[i64], mu: &[Rational]) -> Result<GaussianRational> {
        let u = GroupElement::unit(gamma.to_vec());
        let k = self.mul(&self.inv(&self.sigma_hat_unit(gamma)), &u).scalar;
        let eta = Rational::from_int(self.eta.eval(gamma) as i64);
        Ok((&self.phase(gamma, mu)? * &k).scale(&eta).inv())
    }

    fn sigma_hat_unit(&self, gamma: &[i64]) -> GroupElement {
        GroupElement::unit(self.frame.sigma.apply_int(gamma))
    }

    /// `γ − σγ` in `L₋` coordinates.
    pub fn minus_difference(&self, gamma: &[i64]) -> Vec<i64> {
        let sg = self.frame.sigma.apply_int(gamma);
        let d: Vec<i64> = gamma.iter().zip(&sg).map(|(a, b)| a - b).collect();
        integral_vec(&self.frame.minus_coords(&to_rational_vec(&d))).expect("(1-σ)Q-bar lies in L-")
    }

    pub fn weight_class_group(&self) -> Result<WeightClasses> {
        let p = self.frame.plus_rank();
        let image = Sublattice::from_generators(p, &self.images);
        let ginv = self.frame.plus_gram_inverse();
        let reps = image
            .transversal()?
            .into_iter()
            .map(|f| lattice::qmat_vec(ginv, &to_rational_vec(&f)))
            .collect();
        let invariant_factors = if p == 0 {
            Vec::new()
        } else {
            let (_, d, _) = lattice::smith_normal_form(image.basis());
            d.into_iter().filter(|&x| x > 1).map(|x| x as i64).collect()
        };
        Ok(WeightClasses { image, reps, invariant_factors })
    }

    /// The class representative of a weight in `L₊*`.
    pub fn reduce_weight(&self, classes: &WeightClasses, mu: &[Rational]) -> Result<QVec> {
        let f = self.frame.l_plus.gram_apply(mu);
        let fi = integral_vec(&f).ok_or_else(|| Error::Domain("weight is not in the dual of L+".into()))?;
        let r = classes.image.reduce_int(&fi);
        Ok(lattice::qmat_vec(self.frame.plus_gram_inverse(), &to_rational_vec(&r)))
    }

    pub fn free_sign_group(&self) -> FreeSignGroup {
        let n = self.frame.rank();
        let kernel = sign_kernel_basis(&self.frame.l_minus);
        let mut image = Vec::new();
        let mut span: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let g: Vec<i64> = (0..n).map(|j| i64::from(i == j)).collect();
            let y = self.minus_difference(&g);
            if extends(&span, &y) {
                span.push(y.clone());
                image.push((g, y));
            }
        }
        let mut complement = Vec::new();
        for k in kernel {
            if extends(&span, &k) {
                span.push(k.clone());
                complement.push(k);
            }
        }
        FreeSignGroup { image, complement }
    }

    /// Rank over `F₂` of `ρ: Q̄ → V*`, `γ ↦ (γ|·) mod 2`, on the complement basis.
    pub fn rho_rank(&self, free: &FreeSignGroup) -> usize {
        let n = self.frame.rank();
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let g: Vec<i64> = (0..n).map(|j| i64::from(i == j)).collect();
                free.complement
                    .iter()
                    .map(|k| {
                        let w = integral_vec(&self.frame.minus_to_w(&to_rational_vec(k))).expect("integral");
                        self.inner(&g, &w)
                    })
                    .collect()
            })
            .collect();
        f2_row_basis(&rows).len()
    }

    pub fn count_twisted_modules(&self) -> Result<usize> {
        Ok(self.weight_class_group()?.order() << self.free_sign_group().dim())
    }

    /// One descriptor per irreducible module: classes in colex order, then
    /// free signs read in binary with `−` as 1.
    pub fn descriptors(&self) -> Result<Vec<TwistedModuleDescriptor>> {
        let classes = self.weight_class_group()?;
        let free = self.free_sign_group();
        let d = symplectic_half_rank(&self.frame.l_minus);
        let mut out = Vec::new();
        for mu in &classes.reps {
            let ground_weight = self.ground_weight(mu);
            for mask in 0..(1usize << free.dim()) {
                let free_signs: Vec<i8> =
                    (0..free.dim()).map(|b| if (mask >> b) & 1 == 1 { -1 } else { 1 }).collect();
                let character = self.character_at(mu, &free, &free_signs)?;
                out.push(TwistedModuleDescriptor {
                    index: out.len(),
                    weight: mu.clone(),
                    character,
                    free_signs,
                    weight_space_dim: 1 << d,
                    ground_weight: ground_weight.clone(),
                });
            }
        }
        Ok(out)
    }

    /// The central character at weight `μ`, with the free signs on the complement.
    pub fn character_at(&self, mu: &[Rational], free: &FreeSignGroup, free_signs: &[i8]) -> Result<CentralCharacter> {
        let template =
            enumerate_central_characters_with(&self.frame.l_minus, &self.eps_minus).swap_remove(0);
        let mut values = Vec::new();
        for (g, y) in &free.image {
            let v = self.forced_value(g, mu)?;
            values.push((y.clone(), sign_from_value(&template, y, &v)?));
        }
        for (k, &s) in free.complement.iter().zip(free_signs) {
            values.push((k.clone(), s));
        }
        let chi = character_from_values(&self.frame.l_minus, &self.eps_minus, &values)?;
        let n = self.frame.rank();
        for i in 0..n {
            let g: Vec<i64> = (0..n).map(|j| i64::from(i == j)).collect();
            let y = self.minus_difference(&g);
            if chi_value(&chi, &y)? != self.forced_value(&g, mu)? {
                return Err(Error::Verification(format!("C relation fails for basis vector {}", i)));
            }
        }
        Ok(chi)
    }

    /// `min |μ|²/2 + rank(L₋)/16` over the weights `μ ∈ μ₀ + π₀Q̄`.
    pub fn ground_weight(&self, mu0: &[Rational]) -> Rational {
        let lp = &self.frame.l_plus;
        let mut best: Option<Rational> = None;
        for g in self.frame.transversal() {
            let rep = lattice::add_vec(mu0, &self.frame.plus_coords(&to_rational_vec(&g)));
            let bound = lattice::norm(lp, &rep);
            if let Some(v) = enumerate_coset_vectors(lp, &rep, &bound).first() {
                let nrm = lattice::norm(lp, v);
                if best.as_ref().is_none_or(|b| &nrm < b) {
                    best = Some(nrm);
                }
            }
        }
        best.unwrap_or_else(Rational::zero) / Rational::from_int(2)
            + Rational::new(self.frame.minus_rank() as i64, 16)
    }

    /// The `σ` eigenvalue `e^{2πi(b_x + (π₀x|μ₀))}` on the weight space of
    /// `μ₀ + π₀x`, normalized to `+1` on `μ₀`. Errors if it is not a sign.
    pub fn sigma_eigenvalue(&self, mu0: &[Rational], x: &[i64]) -> Result<i8> {
        self.phase(x, mu0)?
            .as_sign()
            .ok_or_else(|| Error::Verification(format!("sigma eigenvalue at {:?} is not a sign", x)))
    }

    pub fn build_monomial_representation(
        &self,
        descriptor: &TwistedModuleDescriptor,
        window: i64,
    ) -> Result<MonomialRepresentation<'_>> {
        MonomialRepresentation::new(self, descriptor, window)
    }
}

fn extends(span: &[Vec<i64>], v: &[i64]) -> bool {
    let mut trial = span.to_vec();
    trial.push(v.to_vec());
    f2_row_basis(&trial).len() > f2_row_basis(span).len()
}

/// A basis state `U_{g_1}^{n_1}⋯U_{g_p}^{n_p} U_{F_1}^{t_1}⋯U_{F_d}^{t_d} w₀`.
pub type State = (Vec<i64>, Vec<u8>);

/// Result of [`MonomialRepresentation::verify`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialCheck {
    pub states: usize,
    pub relation_checks: usize,
    pub c_checks: usize,
    pub sigma_checks: usize,
}

/// The representation induced from a character of a maximal abelian subgroup,
/// restricted to a window `Σ|n_j| ≤ window` of weights.
pub struct MonomialRepresentation<'a> {
    group: &'a TwistedGroup,
    pub descriptor: TwistedModuleDescriptor,
    pub window: i64,
    /// Symplectic pairs `(E_i, F_i)` for `(α|β) mod 2` on `L₋`, in `L₋` coordinates.
    pub symplectic: Vec<(Vec<i64>, Vec<i64>)>,
    psi: Vec<GaussianRational>,
    pub states: Vec<State>,
    creators: HashMap<State, GroupElement>,
}

impl<'a> MonomialRepresentation<'a> {
    fn new(group: &'a TwistedGroup, descriptor: &TwistedModuleDescriptor, window: i64) -> Result<Self> {
        let symplectic = symplectic_pairs(group.frame.l_minus.gram());
        let mut rep = MonomialRepresentation {
            group,
            descriptor: descriptor.clone(),
            window,
            symplectic,
            psi: Vec::new(),
            states: Vec::new(),
            creators: HashMap::new(),
        };
        let mut psi = Vec::new();
        for (e, _) in &rep.symplectic {
            let u = GroupElement::unit(rep.minus_w(e));
            let sq = group.mul(&u, &u).scalar;
            let twice: Vec<i64> = e.iter().map(|x| 2 * x).collect();
            let target = &sq * &chi_value(&descriptor.character, &twice)?;
            psi.push(sqrt_gaussian(&target)?);
        }
        rep.psi = psi;
        let p = group.frame.plus_rank();
        let d = rep.symplectic.len();
        let mut ns: Vec<Vec<i64>> = vec![Vec::new()];
        for _ in 0..p {
            ns = ns
                .into_iter()
                .flat_map(|pre| {
                    (-window..=window).map(move |x| {
                        let mut v = pre.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        for n in ns.into_iter().filter(|n| n.iter().map(|x| x.abs()).sum::<i64>() <= window) {
            for mask in 0..(1usize << d) {
                rep.states.push((n.clone(), (0..d).map(|b| ((mask >> b) & 1) as u8).collect()));
            }
        }
        rep.creators = rep.states.iter().map(|s| (s.clone(), rep.build_creator(s))).collect();
        Ok(rep)
    }

    fn minus_w(&self, c: &[i64]) -> Vec<i64> {
        integral_vec(&self.group.frame.minus_to_w(&to_rational_vec(c))).expect("integral")
    }

    fn form2(&self, a: &[i64], b: &[i64]) -> i64 {
        self.group.frame.l_minus.inner_int(a, b).rem_euclid(2)
    }

    /// The group element creating a basis state from `w₀`.
    pub fn creator(&self, s: &State) -> GroupElement {
        match self.creators.get(s) {
            Some(h) => h.clone(),
            None => self.build_creator(s),
        }
    }

    fn build_creator(&self, s: &State) -> GroupElement {
        let g = self.group;
        let mut h = GroupElement::unit(vec![0; g.frame.rank()]);
        for (lift, &k) in g.lifts.iter().zip(&s.0) {
            h = g.mul(&h, &g.pow(&GroupElement::unit(lift.clone()), k));
        }
        for ((_, f), &t) in self.symplectic.iter().zip(&s.1) {
            if t == 1 {
                h = g.mul(&h, &GroupElement::unit(self.minus_w(f)));
            }
        }
        h
    }

    /// The weight of a basis state, in `L₊` coordinates.
    pub fn weight(&self, s: &State) -> QVec {
        let mut mu = self.descriptor.weight.clone();
        for (lift, &k) in self.group.lifts.iter().zip(&s.0) {
            let p = self.group.frame.plus_coords(&to_rational_vec(lift));
            mu = lattice::add_vec(&mu, &lattice::scale_vec(&p, &Rational::from_int(k)));
        }
        mu
    }

    /// `ψ(U_a)` for `a` in the maximal abelian lattice `A = rad + ΣZE_i`.
    fn psi(&self, a: &[i64]) -> Result<GaussianRational> {
        let g = self.group;
        let mut r = a.to_vec();
        let mut h = GroupElement::unit(vec![0; g.frame.rank()]);
        let mut value = GaussianRational::one();
        let mut es = Vec::new();
        for (j, (e, f)) in self.symplectic.iter().enumerate() {
            if self.form2(a, f) == 1 {
                for (ri, ei) in r.iter_mut().zip(e) {
                    *ri -= ei;
                }
                value = &value * &self.psi[j];
                es.push(e.clone());
            }
        }
        h = g.mul(&h, &GroupElement::unit(self.minus_w(&r)));
        for e in &es {
            h = g.mul(&h, &GroupElement::unit(self.minus_w(e)));
        }
        let chi = chi_value(&self.descriptor.character, &r)?;
        Ok(&(&value * &chi) * &h.scalar.inv())
    }

    /// `x · |s⟩ = coefficient · |s'⟩`.
    pub fn act(&self, x: &GroupElement, s: &State) -> Result<(GaussianRational, State)> {
        let g = self.group;
        let y = g.mul(x, &self.creator(s));
        let f: QVec = g
            .frame
            .plus_basis
            .iter()
            .map(|b| Rational::from_int(g.inner(b, &y.vector)))
            .collect();
        let n: Vec<i64> = if g.images.is_empty() {
            Vec::new()
        } else {
            let c: QVec = (0..f.len())
                .map(|j| {
                    f.iter().zip(&g.images_inv).fold(Rational::zero(), |acc, (fi, row)| acc + &(fi * &row[j]))
                })
                .collect();
            integral_vec(&c).ok_or_else(|| Error::Verification("weight left the class".into()))?
        };
        let mut w = y.vector.clone();
        for (lift, &k) in g.lifts.iter().zip(&n) {
            for (wi, li) in w.iter_mut().zip(lift) {
                *wi -= k * li;
            }
        }
        let mut a = integral_vec(&g.frame.minus_coords(&to_rational_vec(&w)))
            .ok_or_else(|| Error::Verification("remainder is not in L-".into()))?;
        let mut t = Vec::with_capacity(self.symplectic.len());
        for (e, f) in &self.symplectic {
            let tk = self.form2(&a, e) as u8;
            if tk == 1 {
                for (ai, fi) in a.iter_mut().zip(f) {
                    *ai -= fi;
                }
            }
            t.push(tk);
        }
        let target: State = (n, t);
        let lead = self.creator(&target);
        let tail = GroupElement::unit(self.minus_w(&a));
        let k = g.mul(&lead, &tail).scalar;
        let coef = &(&y.scalar * &k.inv()) * &self.psi(&a)?;
        Ok((coef, target))
    }

    /// `σ|s⟩ = σ̂(h)w₀` where `|s⟩ = h w₀`.
    pub fn sigma_act(&self, s: &State) -> Result<(GaussianRational, State)> {
        let h = self.creator(s);
        let zero: State = (vec![0; s.0.len()], vec![0; s.1.len()]);
        self.act(&self.group.sigma_hat(&h), &zero)
    }

    /// Checks the defining relations, the `C_α = 1` constraints and the
    /// compatibility of `σ` on every state of the window.
    pub fn verify(&self) -> Result<MonomialCheck> {
        let g = self.group;
        let n = g.frame.rank();
        let mut probes: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for i in 0..n {
            probes.push((0..n).map(|j| -i64::from(i == j)).collect());
            for k in i + 1..n {
                probes.push((0..n).map(|j| i64::from(j == i || j == k)).collect());
            }
        }
        let mut check = MonomialCheck { states: self.states.len(), ..Default::default() };
        let mu0 = &self.descriptor.weight;
        for s in &self.states {
            let wt = self.weight(s);
            let (c3, s4) = self.sigma_act(s)?;
            for a in &probes {
                let ua = GroupElement::unit(a.clone());
                // C_α = 1.
                let x = g.mul(&g.inv(&GroupElement::unit(g.frame.sigma.apply_int(a))), &ua);
                let (c, s2) = self.act(&x, s)?;
                let total = (&c * &g.phase(a, &wt)?).scale(&Rational::from_int(g.eta.eval(a) as i64));
                if &s2 != s || total != GaussianRational::one() {
                    return Err(Error::Verification(format!("C_a != 1 for a = {:?} at state {:?}", a, s)));
                }
                check.c_checks += 1;
                // σ U_α = η(α) U_{σα} σ.
                let (c1, s1) = self.act(&ua, s)?;
                let (c2, s3) = self.sigma_act(&s1)?;
                let (c4, s5) = self.act(&g.sigma_hat(&ua), &s4)?;
                if s3 != s5 || &c1 * &c2 != &c3 * &c4 {
                    return Err(Error::Verification(format!("sigma does not intertwine U_a for a = {:?}", a)));
                }
                check.sigma_checks += 1;
                if a.iter().any(|&x| x < 0) || a.iter().sum::<i64>() != 1 {
                    continue;
                }
                for b in probes.iter().take(n) {
                    let ub = GroupElement::unit(b.clone());
                    let (cb, sb) = self.act(&ub, s)?;
                    let (ca, sab) = self.act(&ua, &sb)?;
                    let (cp, sp) = self.act(&g.mul(&ua, &ub), s)?;
                    if sab != sp || &ca * &cb != cp {
                        return Err(Error::Verification(format!(
                            "U_a U_b relation fails for a = {:?}, b = {:?}",
                            a, b
                        )));
                    }
                    check.relation_checks += 1;
                }
            }
            // σ is the scalar e^{2πi(b_x + (π₀x|μ₀))} on weight spaces.
            if s.1.iter().all(|&t| t == 0) {
                let x = self.creator(s).vector;
                if &s4 != s || c3 != g.phase(&x, mu0)? {
                    return Err(Error::Verification(format!("sigma is not the predicted scalar on {:?}", s)));
                }
            }
        }
        for a in sign_kernel_basis(&g.frame.l_minus) {
            let w = self.minus_w(&a);
            let ua = GroupElement::unit(w.clone());
            let (c1, s1) = self.act(&ua, &self.states[0])?;
            let (c2, _) = self.act(&ua, &s1)?;
            let expected = dyadic_power(-2 * g.frame.l_minus.norm_int(&a))
                * Rational::from_int((g.eps.eval(&w, &w) * g.eta.eval(&w)) as i64);
            if &c1 * &c2 != GaussianRational::real(expected) {
                return Err(Error::Verification(format!("U_a^2 differs from its determined value for a = {:?}", a)));
            }
        }
        Ok(check)
    }

    /// Traces of `U_r` for `r` in the kernel basis on each weight space of the window.
    pub fn trace_fingerprint(&self) -> Result<BTreeMap<QVec, Vec<GaussianRational>>> {
        let kernel = sign_kernel_basis(&self.group.frame.l_minus);
        let mut out: BTreeMap<QVec, Vec<GaussianRational>> = BTreeMap::new();
        for s in &self.states {
            let wt = self.weight(s);
            let entry = out.entry(wt).or_insert_with(|| vec![GaussianRational::zero(); kernel.len()]);
            for (slot, r) in entry.iter_mut().zip(&kernel) {
                let (c, s2) = self.act(&GroupElement::unit(self.minus_w(r)), s)?;
                if &s2 == s {
                    *slot = &*slot + &c;
                }
            }
        }
        Ok(out)
    }
}

/// Whether two fingerprints certify inequivalent representations.
pub fn fingerprints_differ(
    a: &BTreeMap<QVec, Vec<GaussianRational>>,
    b: &BTreeMap<QVec, Vec<GaussianRational>>,
) -> bool {
    let shared: Vec<&QVec> = a.keys().filter(|k| b.contains_key(*k)).collect();
    shared.is_empty() || shared.iter().any(|k| a[*k] != b[*k])
}

/// Symplectic pairs for the form `(x|y) mod 2`, as 0/1 vectors.
pub fn symplectic_pairs(gram: &[Vec<i64>]) -> Vec<(Vec<i64>, Vec<i64>)> {
    let m = gram.len();
    let form = |x: &[i64], y: &[i64]| -> i64 {
        let mut s = 0;
        for i in 0..m {
            for j in 0..m {
                s += x[i] * gram[i][j] * y[j];
            }
        }
        s.rem_euclid(2)
    };
    let mut pool: Vec<Vec<i64>> = (0..m).map(|i| (0..m).map(|j| i64::from(i == j)).collect()).collect();
    let mut out = Vec::new();
    loop {
        let mut found = None;
        'search: for i in 0..pool.len() {
            for j in i + 1..pool.len() {
                if form(&pool[i], &pool[j]) == 1 {
                    found = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((i, j)) = found else { break };
        let e = pool[i].clone();
        let f = pool[j].clone();
        pool = pool
            .into_iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, z)| {
                let (bf, be) = (form(&z, &f), form(&z, &e));
                z.iter()
                    .zip(&e)
                    .zip(&f)
                    .map(|((zi, ei), fi)| (zi + bf * ei + be * fi).rem_euclid(2))
                    .collect()
            })
            .collect();
        out.push((e, f));
    }
    out
}

/// A square root of `±r` or `±i·r` with `r` a rational square (up to the unit).
fn sqrt_gaussian(z: &GaussianRational) -> Result<GaussianRational> {
    let bad = || Error::Verification(format!("{} has no square root in Q(i)", z));
    if !z.im.is_zero() || z.re.is_zero() {
        return Err(bad());
    }
    let r = z.re.abs();
    let (p, q) = (r.numer().clone(), r.denom().clone());
    let (sp, sq) = (p.sqrt(), q.sqrt());
    if &sp * &sp != p || &sq * &sq != q {
        return Err(bad());
    }
    let root = Rational::from_big(sp, sq);
    Ok(if z.re.is_negative() { GaussianRational::new(Rational::zero(), root) } else { GaussianRational::real(root) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isometry::Isometry;
    use crate::lattice::EvenLattice;

    fn a2_swap() -> TwistedGroup {
        let a2 = EvenLattice::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        let s = Isometry::new(&a2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        TwistedGroup::new(&Frame::new(&a2, &s).unwrap()).unwrap()
    }

    #[test]
    fn a2_has_four_twisted_modules() {
        let g = a2_swap();
        assert_eq!(g.count_twisted_modules().unwrap(), 4);
        for d in g.descriptors().unwrap() {
            let rep = g.build_monomial_representation(&d, 2).unwrap();
            rep.verify().unwrap();
        }
    }

    #[test]
    fn inverse_is_two_sided() {
        let g = a2_swap();
        let x = GroupElement::unit(vec![1, 2]);
        let e = g.mul(&x, &g.inv(&x));
        assert_eq!(e, GroupElement::unit(vec![0, 0]));
        assert_eq!(g.mul(&g.inv(&x), &x), GroupElement::unit(vec![0, 0]));
    }
}
