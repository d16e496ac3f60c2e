// Theta series, Fock space characters and the graded dimension of `V_Q̄^σ`.

use orbifold::catalog;
use orbifold::gsigma::TwistedGroup;
use orbifold::isometry::Frame;
use orbifold::qseries::{
    check_theta_factorization, inv_product_character, orbifold_character_two_ways, theta, Parity, Shift,
};
use orbifold::Rational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let e = catalog::entry("A2-dynkin")?;
    let order = Rational::from_int(4);
    let t = theta(&e.lattice, &[Rational::zero(), Rational::zero()], &order);
    println!("theta_A2 = {}", t);
    assert_eq!(t.dump(), "0:1, 1:6, 3:6, 4:6");

    let p = inv_product_character(1, Parity::Minus, Shift::Half, &Rational::from_int(3));
    println!("prod (1 - q^(n-1/2))^-1 = {}", p);

    let order = Rational::from_int(10);
    let frame = Frame::new(&e.lattice, &e.isometry)?;
    let group = TwistedGroup::new(&frame)?;
    let fact = check_theta_factorization(&frame, &order);
    let orb = orbifold_character_two_ways(&frame, &group.eta, &order)?;
    println!("theta factorization over {} cosets: {}", fact.cosets, fact.passed);
    println!("char V^sigma = {}", orb.character);
    assert!(fact.passed && orb.passed);
    Ok(())
}

fn main() {
    run_example().expect("theta example");
}
