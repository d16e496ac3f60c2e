//! End-to-end acceptance run over the catalog.
//!
//! Prints one PASS/FAIL line per criterion. A criterion listed in
//! `KNOWN_DEVIATIONS` is expected to fail because the computed answer differs
//! from the published one; the run exits non-zero only when the set of failing
//! criteria differs from that list.

use std::collections::BTreeSet;
use std::time::Instant;

use orbifold::catalog::{self, CatalogEntry};
use orbifold::census::{full_census, full_census_with, CensusOptions, CensusReport, EigenSign, ModuleKind};
use orbifold::cocycle::{build_epsilon, property_scan};
use orbifold::exactnum::{dyadic_power, GaussianRational};
use orbifold::gsigma::TwistedGroup;
use orbifold::isometry::{parity_equivalence_scan, Frame};
use orbifold::lattice::{fract_vec, to_rational_vec, EvenLattice, QVec};
use orbifold::minus_one::{central_sign_lattice, chi_value, enumerate_central_characters, untwisted_tag};
use orbifold::qseries;
use orbifold::Rational;
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Criteria whose computed answer disagrees with the published one.
/// * 3: the `T₁` modules of A3 sit over the cosets `λ + L₊` with `λ` a
///   non-integral `L₊*` weight, not over `L₊` and `α/2 + L₊`.
/// * 5: E6 has `(Q*/Q)^σ = 0`, so `N_tw = 1` and there are 2 twisted-type modules.
/// * 10: the published totals for E6 and A3-neg differ from the counting formulas.
const KNOWN_DEVIATIONS: &[u32] = &[3, 5, 10];

type Outcome = (bool, String);
type Criterion = (u32, &'static str, fn() -> Outcome);

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

fn census(name: &str) -> (CatalogEntry, CensusReport, f64) {
    let e = catalog::entry(name).expect("catalog entry");
    let t = Instant::now();
    let report = full_census(&e.lattice, &e.isometry).expect("census");
    (e, report, t.elapsed().as_secs_f64())
}

fn counts_line(name: &str, rep: &CensusReport, secs: f64) -> String {
    format!("{} {}+{} in {:.2}s", name, rep.counts.untwisted, rep.counts.twisted, secs)
}

fn criterion_counts(name: &str, untwisted: usize, twisted: usize, limit: f64) -> Outcome {
    let (_, rep, secs) = census(name);
    let ok = rep.counts.untwisted == untwisted && rep.counts.twisted == twisted && secs < limit && rep.all_checks_pass();
    (ok, counts_line(name, &rep, secs))
}

/// A module as a sorted list of `(plus coset, minus module)` summands.
type Shape = Vec<(QVec, String)>;

fn shape(rep: &CensusReport, kind: ModuleKind) -> BTreeSet<Shape> {
    rep.modules
        .iter()
        .filter(|m| m.kind == kind)
        .map(|m| m.branching_multiset().iter().map(|s| (s.plus_part.clone(), s.minus_part.describe())).collect())
        .collect()
}

fn plus_of(frame: &Frame, ambient: &[Rational]) -> QVec {
    fract_vec(&frame.plus_coords(&frame.from_ambient(ambient).expect("in Q-bar ⊗ Q")))
}

fn minus_of(frame: &Frame, ambient: &[Rational]) -> QVec {
    frame.minus_coords(&frame.from_ambient(ambient).expect("in Q-bar ⊗ Q"))
}

fn scaled(v: &[i64], s: Rational) -> QVec {
    to_rational_vec(v).iter().map(|x| x * &s).collect()
}

fn add(a: &[Rational], b: &[Rational]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sorted(mut v: Shape) -> Shape {
    v.sort();
    v
}

/// The branching displays for a rank-one `L₋ = Zβ` with `Q/L = {L, α/2-shift}`
/// and a merged module over the two given plus cosets.
fn swap_displays(frame: &Frame, alpha: &[i64], beta: &[i64], merged: [QVec; 2]) -> (BTreeSet<Shape>, BTreeSet<Shape>) {
    let zero_p = plus_of(frame, &scaled(alpha, r(0, 1)));
    let half_a = plus_of(frame, &scaled(alpha, r(1, 2)));
    let zero_m = minus_of(frame, &scaled(beta, r(0, 1)));
    let half_b = minus_of(frame, &scaled(beta, r(1, 2)));
    let quarter_b = minus_of(frame, &scaled(beta, r(1, 4)));
    let tag = |m: &QVec, s: i8| untwisted_tag(m, s).describe();
    let tw = |j: usize, s: i8| format!("V^{{T{},{}}}", j, if s > 0 { "+" } else { "-" });
    let mut untwisted = BTreeSet::new();
    let mut twisted = BTreeSet::new();
    for s in [1i8, -1] {
        untwisted.insert(sorted(vec![(zero_p.clone(), tag(&zero_m, s)), (half_a.clone(), tag(&half_b, s))]));
        untwisted.insert(sorted(vec![(zero_p.clone(), tag(&half_b, s)), (half_a.clone(), tag(&zero_m, s))]));
        twisted.insert(sorted(vec![(zero_p.clone(), tw(1, s)), (half_a.clone(), tw(1, s))]));
        twisted.insert(sorted(vec![(zero_p.clone(), tw(2, s)), (half_a.clone(), tw(2, -s))]));
    }
    let [m1, m2] = merged;
    untwisted.insert(sorted(vec![(m1, tag(&quarter_b, 1)), (m2, tag(&quarter_b, 1))]));
    (untwisted, twisted)
}

fn describe_shape(s: &Shape) -> String {
    s.iter()
        .map(|(p, m)| format!("V[{}] x {}", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","), m))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn criterion_3() -> Outcome {
    let (e, rep, secs) = census("A3-dynkin");
    let frame = Frame::new(&e.lattice, &e.isometry).expect("frame");
    let (alpha, beta) = ([1, 0, 1], [1, 0, -1]);
    let half_a2 = plus_of(&frame, &[r(0, 1), r(1, 2), r(0, 1)]);
    let merged = [half_a2.clone(), plus_of(&frame, &[r(1, 2), r(1, 2), r(1, 2)])];
    let (want_u, want_t) = swap_displays(&frame, &alpha, &beta, merged);
    let got_u = shape(&rep, ModuleKind::Untwisted);
    let got_t = shape(&rep, ModuleKind::Twisted);
    let t2 = |s: &BTreeSet<Shape>| -> BTreeSet<Shape> {
        s.iter().filter(|m| m.iter().any(|(_, t)| t.contains("T2"))).cloned().collect()
    };
    let u_ok = got_u == want_u;
    let t2_ok = t2(&got_t) == t2(&want_t);
    let all_ok = got_t == want_t;
    let mut detail = format!(
        "{}; untwisted displays {}, T2 sign flip {}",
        counts_line("A3-dynkin", &rep, secs),
        if u_ok { "match" } else { "differ" },
        if t2_ok { "matches" } else { "differs" }
    );
    let extra: Vec<String> = got_t.difference(&want_t).map(describe_shape).collect();
    if !extra.is_empty() {
        detail.push_str(&format!("; computed T1 modules {} not in the published table", extra.join(" | ")));
    }
    let ok = rep.counts.untwisted == 5 && rep.counts.twisted == 4 && u_ok && all_ok && secs < 5.0;
    (ok, detail)
}

fn criterion_4() -> Outcome {
    let mut ok = true;
    let mut lines = Vec::new();
    for n in 4..=6usize {
        let name = format!("D{}-dynkin", n);
        let (e, rep, secs) = census(&name);
        let frame = Frame::new(&e.lattice, &e.isometry).expect("frame");
        let mut alpha = vec![0i64; n];
        alpha[n - 2] = 1;
        alpha[n - 1] = 1;
        let theta = e.expected.special.iter().find(|(k, _)| k == "theta").expect("theta").1.clone();
        let shifted = |k: i64| plus_of(&frame, &add(&scaled(&alpha, r(k, 4)), &theta));
        let want: BTreeSet<QVec> = [shifted(n as i64 - 1), shifted(n as i64 + 1)].into_iter().collect();
        let merged: Vec<BTreeSet<QVec>> = rep
            .untwisted()
            .filter(|m| m.eigen_sign == EigenSign::Merged)
            .map(|m| m.branching.iter().map(|s| s.plus_part.clone()).collect())
            .collect();
        let theta_ok = merged.len() == 1 && merged[0] == want;
        let this = rep.counts.untwisted == 5 && rep.counts.twisted == 4 && theta_ok && secs < 10.0;
        ok &= this;
        lines.push(format!("{}{}", counts_line(&name, &rep, secs), if theta_ok { "" } else { " (theta coset missing)" }));
    }
    (ok, lines.join(", "))
}

fn criterion_5() -> Outcome {
    let (_, rep, secs) = census("E6-dynkin");
    let c = &rep.counts;
    let ok = c.untwisted == 3 && c.twisted == 8 && c.n_tw == 4 && secs < 10.0;
    (
        ok,
        format!(
            "{}, N_tw = {}, fixed cosets of Q*/Q = {}; published 3+8 with N_tw = 4",
            counts_line("E6-dynkin", &rep, secs),
            c.n_tw,
            c.fixed_cosets
        ),
    )
}

fn unit_values(l: &EvenLattice, beta: &[i64]) -> Vec<(String, GaussianRational)> {
    enumerate_central_characters(l)
        .iter()
        .map(|chi| (chi.label(), chi_value(chi, beta).expect("central")))
        .collect()
}

fn box_vectors(m: usize, radius: i64) -> Vec<Vec<i64>> {
    let side = (2 * radius + 1) as usize;
    (0..side.pow(m as u32))
        .map(|mut k| {
            (0..m)
                .map(|_| {
                    let c = (k % side) as i64 - radius;
                    k /= side;
                    c
                })
                .collect()
        })
        .collect()
}

fn criterion_6() -> Outcome {
    let i64th = GaussianRational::new(Rational::zero(), r(1, 64));
    let a2 = unit_values(&EvenLattice::new(vec![vec![6]]).unwrap(), &[1]);
    let a2_ok = a2.len() == 2 && a2.iter().any(|(_, v)| *v == i64th) && a2.iter().any(|(_, v)| *v == -i64th.clone());
    let a3 = unit_values(&EvenLattice::new(vec![vec![4]]).unwrap(), &[1]);
    let a3_ok = a3.len() == 2
        && a3.iter().all(|(label, v)| {
            let j: i64 = label[1..].parse().unwrap();
            *v == GaussianRational::real(r(if j % 2 == 0 { 1 } else { -1 }, 16))
        });

    let mut checked = 0usize;
    let mut failures = Vec::new();
    for name in catalog::names() {
        let e = catalog::entry(&name).unwrap();
        let frame = Frame::new(&e.lattice, &e.isometry).unwrap();
        let l = &frame.l_minus;
        let m = l.rank();
        if m == 0 {
            continue;
        }
        let eps = build_epsilon(l);
        let central = central_sign_lattice(l);
        let radius = if m <= 4 { 2 } else { 1 };
        for chi in enumerate_central_characters(l) {
            for a in box_vectors(m, radius) {
                if !central.contains_int(&a) {
                    continue;
                }
                let v = chi_value(&chi, &a).unwrap();
                let n = l.norm_int(&a);
                let want = GaussianRational::real(dyadic_power(-2 * n) * Rational::from_int(eps.eval(&a, &a) as i64));
                checked += 1;
                if &v * &v != want && failures.len() < 3 {
                    failures.push(format!("{} {} at {:?}", name, chi.label(), a));
                }
            }
        }
    }
    let fmt = |v: &[(String, GaussianRational)]| {
        v.iter().map(|(l, x)| format!("{}: {}", l, x)).collect::<Vec<_>>().join(", ")
    };
    (
        a2_ok && a3_ok && failures.is_empty(),
        format!(
            "|b|^2=6: {}; |b|^2=4: {}; square identity on {} central vectors, {} failures{}",
            fmt(&a2),
            fmt(&a3),
            checked,
            failures.len(),
            failures.first().map(|f| format!(" ({})", f)).unwrap_or_default()
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    let a2 = catalog::entry("A2-dynkin").unwrap();
    let split = orbifold::isometry::analyze(&a2.lattice, &a2.isometry).unwrap();
    let a2_ok = split.q_bar_index == 2 && split.q_bar == split.l;
    ok &= a2_ok;
    notes.push(format!("A2 index {} Q-bar = L {}", split.q_bar_index, split.q_bar == split.l));
    for name in ["A3-dynkin", "D4-dynkin", "D5-dynkin", "D6-dynkin", "E6-dynkin"] {
        let e = catalog::entry(name).unwrap();
        let idx = orbifold::isometry::analyze(&e.lattice, &e.isometry).unwrap().q_bar_index;
        ok &= idx == 1;
        if idx != 1 {
            notes.push(format!("{} index {}", name, idx));
        }
    }
    let mut classes = 0;
    for name in catalog::names() {
        let e = catalog::entry(&name).unwrap();
        match parity_equivalence_scan(&e.lattice, &e.isometry) {
            Ok(c) => classes += c,
            Err(err) => {
                ok = false;
                notes.push(format!("{}: {}", name, err));
            }
        }
    }
    notes.push(format!("index 1 on A3/D4-D6/E6, parity equivalence on {} classes of Q/2Q", classes));
    (ok, notes.join("; "))
}

fn criterion_8() -> Outcome {
    let mut rng = StdRng::seed_from_u64(8);
    let mut random = 0;
    let mut exhaustive = 0;
    let mut failures = Vec::new();
    for name in catalog::names() {
        let e = catalog::entry(&name).unwrap();
        let frame = Frame::new(&e.lattice, &e.isometry).unwrap();
        let group = TwistedGroup::new(&frame).unwrap();
        let scan = property_scan(&frame.lattice, &frame.sigma, &group.eps, &group.eta, 10_000, 8, &mut rng);
        random += scan.random_pairs;
        exhaustive += scan.exhaustive_pairs;
        failures.extend(scan.failures.into_iter().map(|f| format!("{}: {}", name, f)));
    }
    (
        failures.is_empty(),
        format!(
            "{} random and {} exhaustive pairs, {} failures{}",
            random,
            exhaustive,
            failures.len(),
            failures.first().map(|f| format!(" ({})", f)).unwrap_or_default()
        ),
    )
}

fn criterion_9() -> Outcome {
    let order = Rational::from_int(10);
    let t = Instant::now();
    let mut failures = Vec::new();
    let mut entries = 0;
    for name in catalog::names() {
        let e = catalog::entry(&name).unwrap();
        let frame = Frame::new(&e.lattice, &e.isometry).unwrap();
        let group = TwistedGroup::new(&frame).unwrap();
        let theta = qseries::check_theta_factorization(&frame, &order);
        if !theta.passed {
            failures.push(format!("{} theta: {}", name, theta.failure.unwrap_or_default()));
        }
        match qseries::orbifold_character_two_ways(&frame, &group.eta, &order) {
            Ok(rep) if rep.passed => {}
            Ok(rep) => failures.push(format!("{} character: {}", name, rep.failure.unwrap_or_default())),
            Err(err) => failures.push(format!("{} character: {}", name, err)),
        }
        entries += 1;
    }
    let secs = t.elapsed().as_secs_f64();
    (
        failures.is_empty() && secs < 60.0,
        format!(
            "{} entries to order q^10 in {:.2}s{}",
            entries,
            secs,
            failures.first().map(|f| format!("; {}", f)).unwrap_or_default()
        ),
    )
}

fn criterion_10() -> Outcome {
    let mut formulas_ok = true;
    let mut monomial_ok = true;
    let mut differ = Vec::new();
    for name in catalog::names() {
        let e = catalog::entry(&name).unwrap();
        let opts = CensusOptions { window: 1, name: Some(name.clone()), ..Default::default() };
        let rep = full_census_with(&e.lattice, &e.isometry, &opts).unwrap();
        let c = &rep.counts;
        formulas_ok &= c.untwisted == 2 * c.fixed_cosets + (c.discriminant_order - c.fixed_cosets) / 2;
        formulas_ok &= c.twisted == 2 * c.n_tw;
        monomial_ok &= rep.all_checks_pass();
        if (c.untwisted, c.twisted) != (e.expected.untwisted, e.expected.twisted) {
            differ.push(format!(
                "{} computed {}+{} vs published {}+{}",
                name, c.untwisted, c.twisted, e.expected.untwisted, e.expected.twisted
            ));
        }
    }
    let detail = format!(
        "counting formulas {}, monomial checks {}, goldens {}",
        if formulas_ok { "hold" } else { "fail" },
        if monomial_ok { "pass" } else { "fail" },
        if differ.is_empty() { "match".to_string() } else { format!("differ: {}", differ.join(", ")) }
    );
    (formulas_ok && monomial_ok && differ.is_empty(), detail)
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        (1, "A2 Dynkin census", || criterion_counts("A2-dynkin", 12, 8, 5.0)),
        (2, "A2 negative Dynkin census", || criterion_counts("A2-neg-dynkin", 24, 24, 5.0)),
        (3, "A3 Dynkin census and branching", criterion_3),
        (4, "D4-D6 Dynkin censuses", criterion_4),
        (5, "E6 Dynkin census", criterion_5),
        (6, "central character values", criterion_6),
        (7, "Q-bar behavior", criterion_7),
        (8, "cocycle and eta identities", criterion_8),
        (9, "character identities", criterion_9),
        (10, "counting formulas and monomial checks", criterion_10),
    ];
    let mut failed = BTreeSet::new();
    for (id, title, run) in criteria {
        let (ok, detail) = run();
        println!("{} criterion {:>2} {}: {}", if ok { "PASS" } else { "FAIL" }, id, title, detail);
        if !ok {
            failed.insert(id);
        }
    }
    let known: BTreeSet<u32> = KNOWN_DEVIATIONS.iter().copied().collect();
    if failed != known {
        eprintln!("failing criteria {:?} differ from the known deviations {:?}", failed, known);
        std::process::exit(1);
    }
    println!("failing criteria are exactly the known deviations {:?}", known);
}
