//! The list of irreducible `V_Q^σ`-modules with their branching into
//! `V_{L₊} ⊗ V_{L₋}^+`-modules.
//!
//! Untwisted type: every `σ`-orbit on `Q̄*/Q̄` gives either a pair `V_{ν+Q̄}^±`
//! (fixed coset) or a single module `V_{ν+Q̄} ≅ V_{σν+Q̄}` (swapped pair).
//! Twisted type: every irreducible `G_σ`-module `P` gives `(F_σ ⊗ P)^±`.
//! Branching runs over a transversal `γ` of `Q̄/L`; the summand for `γ`
//! lives on `γ₊ + λ + L₊` and carries a `V_{L₋}^+`-module.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::gsigma::{fingerprints_differ, MonomialCheck, TwistedGroup, TwistedModuleDescriptor};
use crate::isometry::{discriminant_action, DiscriminantAction, Frame, Isometry};
use crate::lattice::{
    self, colex_cmp, discriminant_group, enumerate_coset_vectors, fract_vec, in_dual, to_rational_vec, EvenLattice,
    IntMat, QVec,
};
use crate::minus_one::{
    c_chi, chi_shift, chi_value, classify_minus_one_with, enumerate_central_characters_with, twisted_tag,
    untwisted_tag, MinusOneModuleTag,
};

/// `V_{λ+L₊} ⊗ M` with `λ` in `L₊` coordinates, reduced mod `L₊`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BranchSummand {
    pub plus_part: QVec,
    pub minus_part: MinusOneModuleTag,
}

impl BranchSummand {
    pub fn describe(&self) -> String {
        let plus = self.plus_part.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        format!("V[{}] x {}", plus, self.minus_part.describe())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleKind {
    Untwisted,
    Twisted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EigenSign {
    Plus,
    Minus,
    Merged,
}

impl EigenSign {
    fn from_sign(s: i8) -> Self {
        if s > 0 {
            EigenSign::Plus
        } else {
            EigenSign::Minus
        }
    }

    pub fn as_sign(self) -> i8 {
        match self {
            EigenSign::Minus => -1,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Provenance {
    /// `V_{ν+Q̄}` with `ν` in W coordinates; `partner` is `σν` for a swapped pair.
    Coset { rep: QVec, ambient_rep: QVec, partner: Option<QVec> },
    /// `F_σ ⊗ P` for the `G_σ`-module with this index.
    Twisted { descriptor: usize, weight: QVec, character: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbifoldModuleDescriptor {
    pub kind: ModuleKind,
    pub provenance: Provenance,
    pub eigen_sign: EigenSign,
    /// Lowest conformal weight of the parent `V_Q`-module.
    pub lowest_weight: Rational,
    pub branching: Vec<BranchSummand>,
}

impl OrbifoldModuleDescriptor {
    pub fn describe(&self) -> String {
        self.branching.iter().map(|s| format!("({})", s.describe())).collect::<Vec<_>>().join(" + ")
    }

    /// The branching as an unordered multiset.
    pub fn branching_multiset(&self) -> Vec<BranchSummand> {
        let mut b = self.branching.clone();
        b.sort();
        b
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusCounts {
    pub untwisted: usize,
    pub twisted: usize,
    pub total: usize,
    /// `D = |Q̄*/Q̄|`.
    pub discriminant_order: usize,
    /// `F`, the number of `σ`-fixed cosets in `Q̄*/Q̄`.
    pub fixed_cosets: usize,
    pub n_tw: usize,
    pub q_bar_index: i64,
    /// `[Q̄ : L]`.
    pub l_index: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSummary {
    /// Rows in the coordinates of `Q`.
    pub q_bar_basis: IntMat,
    pub l_plus_basis: IntMat,
    pub l_minus_basis: IntMat,
    pub l_plus_gram: IntMat,
    pub l_minus_gram: IntMat,
    pub q_bar_index: i64,
    pub l_index: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaugeSummary {
    pub epsilon_convention: String,
    /// `ε(e_i, e_j)` on the basis of `Q̄`.
    pub epsilon_signs: Vec<Vec<i8>>,
    /// Basis of `Q̄/2Q̄` (rows in the coordinates of `Q`) on which `η = +1`.
    pub eta_basis: IntMat,
    /// `η` on the basis of `Q̄`.
    pub eta_values: Vec<i8>,
    pub sigma_normalization: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterSummary {
    pub label: String,
    pub signs: Vec<i8>,
    /// `(α, χ(U_α))` on the kernel basis, `α` in `L₋` coordinates.
    pub values: Vec<(Vec<i64>, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinusOneSummary {
    pub rank: usize,
    pub symplectic_half_rank: usize,
    pub central_characters: Vec<CharacterSummary>,
    pub module_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedSummary {
    pub n_tw: usize,
    pub weight_classes: usize,
    pub weight_class_invariants: Vec<i64>,
    pub free_sign_dim: usize,
    pub rho_rank: usize,
    pub descriptors: Vec<TwistedModuleDescriptor>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), passed, detail: detail.into() }
    }
}

/// `(γ, η(γ))` defining `v_γ = e^γ + η(γ)e^{σγ}`, `γ` in the coordinates of `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VGamma {
    pub gamma: Vec<i64>,
    pub eta: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub name: Option<String>,
    pub gram: IntMat,
    pub sigma: IntMat,
}

/// A candidate branching and whether a realized module has it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub kind: ModuleKind,
    pub branching: Vec<BranchSummand>,
    pub realized: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub input: InputEcho,
    pub split: SplitSummary,
    pub gauges: GaugeSummary,
    pub minus_one: MinusOneSummary,
    pub twisted_sector: TwistedSummary,
    pub counts: CensusCounts,
    pub vgamma: Vec<VGamma>,
    /// The decomposition of `V_Q^σ` itself.
    pub orbifold_decomposition: Vec<BranchSummand>,
    pub modules: Vec<OrbifoldModuleDescriptor>,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidates: Option<Vec<Candidate>>,
}

impl CensusReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn untwisted(&self) -> impl Iterator<Item = &OrbifoldModuleDescriptor> {
        self.modules.iter().filter(|m| m.kind == ModuleKind::Untwisted)
    }

    pub fn twisted(&self) -> impl Iterator<Item = &OrbifoldModuleDescriptor> {
        self.modules.iter().filter(|m| m.kind == ModuleKind::Twisted)
    }
}

/// Options for [`full_census_with`].
#[derive(Clone, Debug)]
pub struct CensusOptions {
    /// Weight window for the explicit `G_σ`-module checks; 0 skips them.
    pub window: i64,
    pub candidates: bool,
    pub name: Option<String>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { window: 1, candidates: false, name: None }
    }
}

fn to_ambient_rows(frame: &Frame, rows: &IntMat) -> IntMat {
    rows.iter()
        .map(|r| frame.to_ambient(&to_rational_vec(r)).iter().map(|x| x.to_i64().expect("integral")).collect())
        .collect()
}

/// The eigenlattices and `Q̄` of a frame, in the coordinates of `Q`.
pub fn split_summary(frame: &Frame) -> SplitSummary {
    SplitSummary {
        q_bar_basis: frame.basis.clone(),
        l_plus_basis: to_ambient_rows(frame, &frame.plus_basis),
        l_minus_basis: to_ambient_rows(frame, &frame.minus_basis),
        l_plus_gram: frame.l_plus.gram().clone(),
        l_minus_gram: frame.l_minus.gram().clone(),
        q_bar_index: frame.split.q_bar_index,
        l_index: frame.l.index().expect("L has full rank in Q-bar"),
    }
}

/// Shared state for the two classifiers.
pub struct CensusContext {
    pub group: TwistedGroup,
    pub action: DiscriminantAction,
    pub transversal: Vec<Vec<i64>>,
}

impl CensusContext {
    pub fn new(q: &EvenLattice, sigma: &Isometry) -> Result<Self> {
        let frame = Frame::new(q, sigma)?;
        let group = TwistedGroup::new(&frame)?;
        let d = discriminant_group(&frame.lattice);
        let action = discriminant_action(&frame.lattice, &frame.sigma, &d)?;
        let transversal = frame.transversal();
        Ok(CensusContext { group, action, transversal })
    }

    pub fn frame(&self) -> &Frame {
        &self.group.frame
    }

    fn plus_part(&self, x: &[Rational]) -> QVec {
        fract_vec(&self.frame().plus_coords(x))
    }

    fn min_norm(&self, x: &[Rational]) -> Rational {
        let l = &self.frame().lattice;
        let bound = lattice::norm(l, x);
        enumerate_coset_vectors(l, x, &bound)
            .first()
            .map(|v| lattice::norm(l, v))
            .unwrap_or_else(Rational::zero)
    }

    fn untwisted_branching(&self, nu: &[Rational], sign: i8) -> Vec<BranchSummand> {
        self.transversal
            .iter()
            .map(|g| {
                let x = lattice::add_vec(nu, &to_rational_vec(g));
                let minus = self.frame().minus_coords(&x);
                let s = sign * self.group.eta.eval(g);
                let minus_part = if sign == 0 { merged_tag(&minus) } else { untwisted_tag(&minus, s) };
                BranchSummand { plus_part: self.plus_part(&x), minus_part }
            })
            .collect()
    }

    fn twisted_branching(
        &self,
        mu0: &[Rational],
        chi: &crate::minus_one::CentralCharacter,
        sign: i8,
        check_eigenvalues: bool,
    ) -> Result<Vec<BranchSummand>> {
        let frame = self.frame();
        let mut out = Vec::new();
        for g in &self.transversal {
            let gq = to_rational_vec(g);
            let gm = frame.minus_coords(&gq);
            let shifted = chi_shift(chi, &gm)?;
            let s = self.group.eta.eval(g) * c_chi(chi, &gm)?;
            if check_eigenvalues {
                let e = self.group.sigma_eigenvalue(mu0, g)?;
                if e != s {
                    return Err(Error::Verification(format!(
                        "summand sign for gamma = {:?}: eta*c = {} but the sigma eigenvalue is {}",
                        g, s, e
                    )));
                }
            }
            let plus = fract_vec(&lattice::add_vec(mu0, &frame.plus_coords(&gq)));
            out.push(BranchSummand { plus_part: plus, minus_part: twisted_tag(&shifted, sign * s) });
        }
        Ok(out)
    }
}

/// The whole `V_{μ+L₋}` as a `V_{L₋}^+`-module, labelled by the colex-smaller of `±μ`.
fn merged_tag(mu: &[Rational]) -> MinusOneModuleTag {
    let a = fract_vec(mu);
    let b = fract_vec(&lattice::neg_vec(mu));
    let coset = if colex_cmp(&b, &a) == std::cmp::Ordering::Less { b } else { a };
    MinusOneModuleTag::UntwistedMerged { coset }
}

/// Untwisted-type modules: two per fixed coset, one per swapped pair.
pub fn classify_untwisted(ctx: &CensusContext) -> Vec<OrbifoldModuleDescriptor> {
    let frame = ctx.frame();
    let act = &ctx.action;
    let mut out = Vec::new();
    let mut orbit_reps: Vec<(usize, Option<usize>)> = act.fixed.iter().map(|&i| (i, None)).collect();
    orbit_reps.extend(act.orbits.iter().map(|&(i, j)| (i, Some(j))));
    orbit_reps.sort_by_key(|&(i, _)| i);
    for (i, partner) in orbit_reps {
        let nu = &act.elements[i];
        let lowest_weight = ctx.min_norm(nu) / Rational::from_int(2);
        let ambient_rep = frame.to_ambient(nu);
        match partner {
            None => {
                for sign in [1i8, -1] {
                    out.push(OrbifoldModuleDescriptor {
                        kind: ModuleKind::Untwisted,
                        provenance: Provenance::Coset { rep: nu.clone(), ambient_rep: ambient_rep.clone(), partner: None },
                        eigen_sign: EigenSign::from_sign(sign),
                        lowest_weight: lowest_weight.clone(),
                        branching: ctx.untwisted_branching(nu, sign),
                    });
                }
            }
            Some(j) => out.push(OrbifoldModuleDescriptor {
                kind: ModuleKind::Untwisted,
                provenance: Provenance::Coset {
                    rep: nu.clone(),
                    ambient_rep,
                    partner: Some(act.elements[j].clone()),
                },
                eigen_sign: EigenSign::Merged,
                lowest_weight,
                branching: ctx.untwisted_branching(nu, 0),
            }),
        }
    }
    out
}

/// Twisted-type modules: `(F_σ ⊗ P)^±` for every irreducible `G_σ`-module `P`.
pub fn classify_twisted(ctx: &CensusContext) -> Result<Vec<OrbifoldModuleDescriptor>> {
    let mut out = Vec::new();
    for d in ctx.group.descriptors()? {
        for sign in [1i8, -1] {
            out.push(OrbifoldModuleDescriptor {
                kind: ModuleKind::Twisted,
                provenance: Provenance::Twisted {
                    descriptor: d.index,
                    weight: d.weight.clone(),
                    character: d.character.label(),
                },
                eigen_sign: EigenSign::from_sign(sign),
                lowest_weight: d.ground_weight.clone(),
                branching: ctx.twisted_branching(&d.weight, &d.character, sign, true)?,
            });
        }
    }
    Ok(out)
}

/// `(γ, η(γ))` for each `γ` in the transversal of `Q̄/L`, in the coordinates of `Q`.
pub fn vgamma_generators(ctx: &CensusContext) -> Vec<VGamma> {
    let frame = ctx.frame();
    ctx.transversal
        .iter()
        .map(|g| {
            let amb = frame.to_ambient(&to_rational_vec(g));
            VGamma {
                gamma: amb.iter().map(|x| x.to_i64().expect("integral")).collect(),
                eta: ctx.group.eta.eval(g),
            }
        })
        .collect()
}

/// Every branching of the candidate shapes: all cosets of `Q̄*/Q̄`, and all
/// `(λ, χ, ±)` with `λ ∈ L₊*/L₊` and `χ` any central character of `L₋`.
pub fn candidate_forms(ctx: &CensusContext, realized: &[OrbifoldModuleDescriptor]) -> Result<Vec<Candidate>> {
    let frame = ctx.frame();
    let mut known: Vec<Vec<BranchSummand>> = realized.iter().map(|m| m.branching_multiset()).collect();
    known.sort();
    let mut out: BTreeMap<(bool, Vec<BranchSummand>), ModuleKind> = BTreeMap::new();
    for m in classify_untwisted(ctx) {
        out.insert((false, m.branching_multiset()), ModuleKind::Untwisted);
    }
    let plus_classes = discriminant_group(&frame.l_plus).elements(frame.plus_rank());
    let chis = enumerate_central_characters_with(&frame.l_minus, &ctx.group.eps_minus);
    for lambda in &plus_classes {
        for chi in &chis {
            for sign in [1i8, -1] {
                let mut b = ctx.twisted_branching(lambda, chi, sign, false)?;
                b.sort();
                out.insert((true, b), ModuleKind::Twisted);
            }
        }
    }
    Ok(out
        .into_iter()
        .map(|((_, branching), kind)| {
            let realized = known.binary_search(&branching).is_ok();
            Candidate { kind, branching, realized }
        })
        .collect())
}

/// Runs the whole pipeline with default options.
pub fn full_census(q: &EvenLattice, sigma: &Isometry) -> Result<CensusReport> {
    full_census_with(q, sigma, &CensusOptions::default())
}

pub fn full_census_with(q: &EvenLattice, sigma: &Isometry, opts: &CensusOptions) -> Result<CensusReport> {
    let ctx = CensusContext::new(q, sigma)?;
    let frame = ctx.frame();
    let group = &ctx.group;

    let untwisted = classify_untwisted(&ctx);
    let twisted = classify_twisted(&ctx)?;
    let classes = group.weight_class_group()?;
    let free = group.free_sign_group();
    let descriptors = group.descriptors()?;

    let d_order = ctx.action.elements.len();
    let f = ctx.action.fixed.len();
    let l_index = frame.l.index()?;
    let counts = CensusCounts {
        untwisted: untwisted.len(),
        twisted: twisted.len(),
        total: untwisted.len() + twisted.len(),
        discriminant_order: d_order,
        fixed_cosets: f,
        n_tw: descriptors.len(),
        q_bar_index: frame.split.q_bar_index,
        l_index,
    };

    let mut checks = Vec::new();
    let formula = 2 * f + (d_order - f) / 2;
    checks.push(CheckResult::new(
        "untwisted count = 2F + (D-F)/2",
        formula == counts.untwisted,
        format!("D = {}, F = {}, formula {}, listed {}", d_order, f, formula, counts.untwisted),
    ));
    checks.push(CheckResult::new(
        "twisted count = 2 N_tw",
        counts.twisted == 2 * counts.n_tw,
        format!("N_tw = {}, listed {}", counts.n_tw, counts.twisted),
    ));
    let lengths_ok = untwisted.iter().chain(&twisted).all(|m| m.branching.len() as i64 == l_index);
    checks.push(CheckResult::new("branching has [Q-bar:L] summands", lengths_ok, format!("[Q-bar:L] = {}", l_index)));
    let dual_ok = untwisted.iter().all(|m| {
        m.branching.iter().all(|s| {
            let minus = match &s.minus_part {
                MinusOneModuleTag::UntwistedMerged { coset } | MinusOneModuleTag::UntwistedSplit { coset, .. } => coset,
                MinusOneModuleTag::Twisted { .. } => return false,
            };
            let w = lattice::add_vec(&frame.plus_to_w(&s.plus_part), &frame.minus_to_w(minus));
            in_dual(&frame.lattice, &w)
        })
    });
    let summands: usize = untwisted.iter().map(|m| m.branching.len()).sum();
    checks.push(CheckResult::new(
        "untwisted summands satisfy lambda + mu in Q-bar*",
        dual_ok,
        format!("{} summands", summands),
    ));

    let mut monomial_total = MonomialCheck::default();
    let mut monomial_error = None;
    let mut prints = Vec::new();
    if opts.window > 0 {
        for d in &descriptors {
            let rep = group.build_monomial_representation(d, opts.window)?;
            match rep.verify() {
                Ok(c) => {
                    monomial_total.states += c.states;
                    monomial_total.relation_checks += c.relation_checks;
                    monomial_total.c_checks += c.c_checks;
                    monomial_total.sigma_checks += c.sigma_checks;
                }
                Err(e) => monomial_error = Some(e.to_string()),
            }
            prints.push(rep.trace_fingerprint()?);
        }
        checks.push(CheckResult::new(
            "G_sigma relations and C_a = 1 on built representations",
            monomial_error.is_none(),
            monomial_error.unwrap_or_else(|| {
                format!(
                    "{} states, {} relation checks, {} C checks, {} sigma checks",
                    monomial_total.states,
                    monomial_total.relation_checks,
                    monomial_total.c_checks,
                    monomial_total.sigma_checks
                )
            }),
        ));
        let mut distinct = true;
        for i in 0..prints.len() {
            for j in i + 1..prints.len() {
                distinct &= fingerprints_differ(&prints[i], &prints[j]);
            }
        }
        checks.push(CheckResult::new(
            "G_sigma modules pairwise inequivalent",
            distinct,
            format!("{} trace fingerprints", prints.len()),
        ));
    }
    let weight_dims: Vec<usize> = descriptors.iter().map(|d| d.weight_space_dim).collect();
    checks.push(CheckResult::new(
        "N_tw = |(Q-bar*/Q-bar)^sigma|",
        descriptors.len() == f,
        format!("N_tw = {}, fixed cosets = {}, weight space dims {:?}", descriptors.len(), f, weight_dims),
    ));

    let ut_set: std::collections::BTreeSet<Vec<BranchSummand>> =
        untwisted.iter().chain(&twisted).map(|m| m.branching_multiset()).collect();
    checks.push(CheckResult::new(
        "branchings pairwise distinct",
        ut_set.len() == counts.total,
        format!("{} distinct of {}", ut_set.len(), counts.total),
    ));

    let minus_chars = enumerate_central_characters_with(&frame.l_minus, &group.eps_minus);
    let central_characters = minus_chars
        .iter()
        .map(|chi| CharacterSummary {
            label: chi.label(),
            signs: chi.signs.clone(),
            values: chi
                .kernel_basis
                .iter()
                .map(|b| (b.clone(), chi_value(chi, b).map(|v| v.to_string()).unwrap_or_default()))
                .collect(),
        })
        .collect();
    let minus_one = MinusOneSummary {
        rank: frame.minus_rank(),
        symplectic_half_rank: crate::minus_one::symplectic_half_rank(&frame.l_minus),
        central_characters,
        module_count: classify_minus_one_with(&frame.l_minus, &group.eps_minus).len(),
    };

    let split = split_summary(frame);
    let gauges = GaugeSummary {
        epsilon_convention: "upper triangular: eps(e_i,e_j) = 1 for i<j, (-1)^(e_i|e_j) for i>j, (-1)^(|e_i|^2/2) on the diagonal"
            .into(),
        epsilon_signs: group.eps.sign_matrix(),
        eta_basis: to_ambient_rows(frame, &group.eta.basis),
        eta_values: group.eta.standard_values(),
        sigma_normalization: "sigma fixes the cyclic vector of each G_sigma-module".into(),
    };
    let twisted_sector = TwistedSummary {
        n_tw: descriptors.len(),
        weight_classes: classes.order(),
        weight_class_invariants: classes.invariant_factors.clone(),
        free_sign_dim: free.dim(),
        rho_rank: group.rho_rank(&free),
        descriptors,
    };
    let orbifold_decomposition = ctx
        .transversal
        .iter()
        .map(|g| {
            let x = to_rational_vec(g);
            BranchSummand {
                plus_part: ctx.plus_part(&x),
                minus_part: untwisted_tag(&frame.minus_coords(&x), group.eta.eval(g)),
            }
        })
        .collect();

    let mut modules = untwisted;
    modules.extend(twisted);
    let candidates = if opts.candidates { Some(candidate_forms(&ctx, &modules)?) } else { None };
    Ok(CensusReport {
        input: InputEcho { name: opts.name.clone(), gram: q.gram().clone(), sigma: sigma.matrix().clone() },
        split,
        gauges,
        minus_one,
        twisted_sector,
        counts,
        vgamma: vgamma_generators(&ctx),
        orbifold_decomposition,
        modules,
        checks,
        candidates,
    })
}

/// Wall-clock seconds for a census run.
pub fn timed_census(q: &EvenLattice, sigma: &Isometry, opts: &CensusOptions) -> Result<(CensusReport, f64)> {
    let t = Instant::now();
    let r = full_census_with(q, sigma, opts)?;
    Ok((r, t.elapsed().as_secs_f64()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn a2_dynkin_counts() {
        let e = catalog::entry("A2-dynkin").unwrap();
        let r = full_census(&e.lattice, &e.isometry).unwrap();
        assert_eq!((r.counts.untwisted, r.counts.twisted), (12, 8));
    }
}
