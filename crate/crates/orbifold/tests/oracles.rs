//! Independent brute-force checks of the closed forms used by the library.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use orbifold::catalog;
use orbifold::census::{full_census_with, CensusOptions};
use orbifold::cocycle::build_epsilon;
use orbifold::exactnum::{dyadic_power, GaussianRational};
use orbifold::isometry::Frame;
use orbifold::lattice::{discriminant_group, EvenLattice, QVec};
use orbifold::minus_one::{central_sign_lattice, chi_value, classify_minus_one, enumerate_central_characters};
use orbifold::qseries::{inv_product_character, theta, Parity, Shift};
use orbifold::Rational;

/// Every `x ∈ [0,1)ⁿ` with denominator dividing `den` and `Gx` integral.
fn brute_dual_classes(l: &EvenLattice, den: i64) -> Vec<QVec> {
    let n = l.rank();
    let total = (den as usize).pow(n as u32);
    let mut out = Vec::new();
    for mut k in 0..total {
        let x: QVec = (0..n)
            .map(|_| {
                let c = (k % den as usize) as i64;
                k /= den as usize;
                Rational::new(c, den)
            })
            .collect();
        let gx = l.gram_apply(&x);
        if gx.iter().all(|v| v.is_integer()) {
            out.push(x);
        }
    }
    out
}

fn fract(v: &[Rational]) -> QVec {
    v.iter().map(|x| x.fract_pos()).collect()
}

#[test]
fn discriminant_group_matches_enumeration() {
    for name in catalog::names() {
        let e = catalog::entry(&name).unwrap();
        let det = e.lattice.det().to_i64().unwrap();
        let mut brute = brute_dual_classes(&e.lattice, det);
        let mut fast = discriminant_group(&e.lattice).elements(e.lattice.rank());
        brute.sort();
        fast.sort();
        assert_eq!(brute.len() as i64, det, "{}", name);
        assert_eq!(brute, fast, "{}", name);
    }
}

#[test]
fn census_counts_match_brute_force_discriminant_data() {
    for name in catalog::names() {
        let e = catalog::entry(&name).unwrap();
        let frame = Frame::new(&e.lattice, &e.isometry).unwrap();
        let det = frame.lattice.det().to_i64().unwrap();
        let classes = brute_dual_classes(&frame.lattice, det);
        let fixed = classes.iter().filter(|x| fract(&frame.sigma.apply(x)) == **x).count();
        let opts = CensusOptions { window: 0, ..Default::default() };
        let rep = full_census_with(&e.lattice, &e.isometry, &opts).unwrap();
        let c = &rep.counts;
        assert_eq!(c.discriminant_order, classes.len(), "{}", name);
        assert_eq!(c.fixed_cosets, fixed, "{}", name);
        assert_eq!(c.untwisted, 2 * fixed + (classes.len() - fixed) / 2, "{}", name);
        assert_eq!(c.n_tw, fixed, "{}", name);
        assert_eq!(c.twisted, 2 * fixed, "{}", name);
    }
}

#[test]
fn theta_matches_box_enumeration() {
    let a2 = EvenLattice::new(vec![vec![2, -1], vec![-1, 2]]).unwrap();
    let order = Rational::from_int(10);
    for coset in [[0, 0], [1, 2], [2, 1]] {
        let c: QVec = coset.iter().map(|&k| Rational::new(k, 3)).collect();
        let mut brute: BTreeMap<Rational, i64> = BTreeMap::new();
        for a in -12..=12 {
            for b in -12..=12 {
                let v = vec![&c[0] + &Rational::from_int(a), &c[1] + &Rational::from_int(b)];
                let h = &orbifold::lattice::norm(&a2, &v) * &Rational::new(1, 2);
                if h < order {
                    *brute.entry(h).or_insert(0) += 1;
                }
            }
        }
        let series = theta(&a2, &c, &order);
        let fast: BTreeMap<Rational, i64> =
            series.terms().into_iter().map(|(e, k)| (e, k.to_i64().unwrap())).collect();
        assert_eq!(fast, brute, "coset {:?}", coset);
    }
}

fn partition_count(n: i64, max_part: i64, allowed: &dyn Fn(i64) -> bool) -> i64 {
    if n == 0 {
        return 1;
    }
    (1..=max_part.min(n)).filter(|&p| allowed(p)).map(|p| partition_count(n - p, p, allowed)).sum()
}

#[test]
fn product_characters_count_partitions() {
    let order = Rational::from_int(15);
    let p = inv_product_character(1, Parity::Minus, Shift::Integer, &order);
    for n in 0..15 {
        assert_eq!(p.coefficient(&Rational::from_int(n)), BigInt::from(partition_count(n, n, &|_| true)));
    }
    // Half-integer parts 1/2, 3/2, ... are odd parts of 2n.
    let h = inv_product_character(1, Parity::Minus, Shift::Half, &order);
    for n in 0..30 {
        let want = partition_count(n, n, &|p| p % 2 == 1);
        assert_eq!(h.coefficient(&Rational::new(n, 2)), BigInt::from(want));
    }
    // ∏(1 + q^n) counts partitions into distinct parts up to sign: (1 − q^n)^{-1}
    // times (1 + q^n)^{-1} is ∏(1 − q^{2n})^{-1}.
    let plus = inv_product_character(1, Parity::Plus, Shift::Integer, &order);
    let even = p.mul(&plus);
    for n in 0..15 {
        let want = if n % 2 == 0 { partition_count(n / 2, n / 2, &|_| true) } else { 0 };
        assert_eq!(even.coefficient(&Rational::from_int(n)), BigInt::from(want));
    }
}

#[test]
fn central_character_count_is_two_to_kernel_dim() {
    for gram in [vec![vec![2]], vec![vec![4]], vec![vec![6]], vec![vec![2, -1], vec![-1, 2]], vec![vec![4, 2], vec![2, 4]]]
    {
        let l = EvenLattice::new(gram.clone()).unwrap();
        let m = l.rank();
        let kernel = (0u32..(1 << m))
            .filter(|mask| {
                let v: Vec<i64> = (0..m).map(|i| ((mask >> i) & 1) as i64).collect();
                (0..m).all(|i| (0..m).map(|j| gram[i][j] * v[j]).sum::<i64>() % 2 == 0)
            })
            .count();
        assert_eq!(enumerate_central_characters(&l).len(), kernel, "{:?}", gram);
    }
}

#[test]
fn rank_one_plus_module_count() {
    // V_L^+ for L = Zβ, |β|² = 2k, has k + 7 irreducible modules.
    for k in 1..=8 {
        let l = EvenLattice::new(vec![vec![2 * k]]).unwrap();
        assert_eq!(classify_minus_one(&l).len() as i64, k + 7, "k = {}", k);
    }
}

#[test]
fn central_values_square_to_cocycle_weight() {
    let lattices = [vec![vec![4]], vec![vec![2, 0], vec![0, 2]], vec![vec![4, 2], vec![2, 4]], vec![vec![6, 0], vec![0, 2]]];
    for gram in lattices {
        let l = EvenLattice::new(gram).unwrap();
        let eps = build_epsilon(&l);
        let central = central_sign_lattice(&l);
        for chi in enumerate_central_characters(&l) {
            for a in -3..=3i64 {
                for b in -3..=3i64 {
                    let v: Vec<i64> = if l.rank() == 1 { vec![a] } else { vec![a, b] };
                    if !central.contains_int(&v) {
                        continue;
                    }
                    let x = chi_value(&chi, &v).unwrap();
                    let n = l.norm_int(&v);
                    let want = GaussianRational::real(dyadic_power(-2 * n) * Rational::from_int(eps.eval(&v, &v).into()));
                    assert_eq!(&x * &x, want, "{:?} at {:?}", chi.label(), v);
                }
            }
        }
    }
}
