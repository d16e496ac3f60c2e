use num_bigint::BigInt;
use orbifold::catalog;
use orbifold::cocycle::{build_epsilon, check_cocycle_pair};
use orbifold::exactnum::GaussianRational;
use orbifold::gsigma::{GroupElement, TwistedGroup};
use orbifold::isometry::Frame;
use orbifold::lattice::{hnf_lower, mat_mul, transpose, EvenLattice, Sublattice};
use orbifold::qseries::{theta, QSeries};
use orbifold::Rational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..30).prop_map(|(p, q)| Rational::new(p, q))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

fn a3_cartan() -> Vec<Vec<i64>> {
    vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
}

/// `Bᵀ C B` for the A3 Cartan matrix `C` and a random nonsingular `B`.
fn even_lattice() -> impl Strategy<Value = EvenLattice> {
    prop::collection::vec(-2i64..=2, 9)
        .prop_map(|v| v.chunks(3).map(|c| c.to_vec()).collect::<Vec<_>>())
        .prop_filter("nonsingular", |b| orbifold::lattice::det_int(b) != BigInt::from(0))
        .prop_map(|b| EvenLattice::new(mat_mul(&transpose(&b), &mat_mul(&a3_cartan(), &b))).unwrap())
}

fn vec3() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 3)
}

fn series() -> impl Strategy<Value = QSeries> {
    prop::collection::vec((0i64..12, -5i64..5), 0..6).prop_map(|terms| {
        QSeries::from_terms(
            terms.into_iter().map(|(e, c)| (Rational::new(e, 2), BigInt::from(c))),
            Rational::from_int(5),
        )
    })
}

proptest! {
    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip(), Rational::one());
        }
    }

    #[test]
    fn gaussian_field_laws(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!((&a * &b).norm_sq(), &a.norm_sq() * &b.norm_sq());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv(), GaussianRational::one());
        }
    }

    #[test]
    fn cocycle_identities_on_random_even_lattices(l in even_lattice(), a in vec3(), b in vec3(), c in vec3()) {
        let eps = build_epsilon(&l);
        prop_assert!(check_cocycle_pair(&l, &eps, &a, &b).is_ok());
        let ab: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        prop_assert_eq!(eps.eval(&ab, &c), eps.eval(&a, &c) * eps.eval(&b, &c));
        prop_assert_eq!(eps.eval(&c, &ab), eps.eval(&c, &a) * eps.eval(&c, &b));
    }

    #[test]
    fn hnf_is_canonical(gens in prop::collection::vec(vec3(), 1..5), seed in 0usize..24) {
        let h = hnf_lower(&gens, 3);
        let from_gens = Sublattice::from_generators(3, &gens);
        let from_hnf = Sublattice::from_generators(3, &h);
        prop_assert!(gens.iter().all(|g| from_hnf.contains_int(g)));
        prop_assert!(h.iter().all(|r| from_gens.contains_int(r)));
        prop_assert_eq!(hnf_lower(&h, 3), h.clone());
        let mut shuffled = gens.clone();
        shuffled.rotate_left(seed % gens.len());
        shuffled.reverse();
        prop_assert_eq!(hnf_lower(&shuffled, 3), h);
    }

    #[test]
    fn qseries_ring_laws(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn theta_coefficients_are_nonnegative(l in even_lattice(), num in vec3()) {
        let coset: Vec<Rational> = num.iter().map(|&k| Rational::new(k, 4)).collect();
        let t = theta(&l, &coset, &Rational::from_int(4));
        prop_assert!(t.terms().iter().all(|(_, c)| *c > BigInt::from(0)));
        if num.iter().all(|k| k % 4 == 0) {
            prop_assert_eq!(t.coefficient(&Rational::zero()), BigInt::from(1));
        }
    }

    #[test]
    fn twisted_group_is_a_group(
        which in 0usize..4,
        a in prop::collection::vec(-2i64..=2, 6),
        b in prop::collection::vec(-2i64..=2, 6),
        c in prop::collection::vec(-2i64..=2, 6),
    ) {
        let name = ["A2-dynkin", "A3-dynkin", "D4-dynkin", "A3-neg-dynkin"][which];
        let e = catalog::entry(name).unwrap();
        let frame = Frame::new(&e.lattice, &e.isometry).unwrap();
        let g = TwistedGroup::new(&frame).unwrap();
        let n = frame.rank();
        let el = |v: &[i64]| GroupElement::unit(v[..n].to_vec());
        let (x, y, z) = (el(&a), el(&b), el(&c));
        prop_assert_eq!(g.mul(&g.mul(&x, &y), &z), g.mul(&x, &g.mul(&y, &z)));
        let id = GroupElement::unit(vec![0; n]);
        prop_assert_eq!(g.mul(&x, &g.inv(&x)), id.clone());
        prop_assert_eq!(g.mul(&g.inv(&x), &x), id);
        let s = g.sigma_hat(&g.mul(&x, &y));
        prop_assert_eq!(s, g.mul(&g.sigma_hat(&x), &g.sigma_hat(&y)));
    }
}
