// The bimultiplicative cocycle `ε` and the sign function `η` lifting `σ`.

use orbifold::catalog;
use orbifold::cocycle::{build_epsilon, property_scan};
use orbifold::gsigma::TwistedGroup;
use orbifold::isometry::Frame;
use rand::rngs::StdRng;
use rand::SeedableRng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let e = catalog::entry("D4-dynkin")?;
    let eps = build_epsilon(&e.lattice);
    println!("eps on the simple roots of D4:");
    for row in eps.sign_matrix() {
        println!("  {:?}", row);
    }

    let frame = Frame::new(&e.lattice, &e.isometry)?;
    let group = TwistedGroup::new(&frame)?;
    println!("eta on the basis of Q-bar: {:?}", group.eta.standard_values());

    let mut rng = StdRng::seed_from_u64(7);
    let scan = property_scan(&frame.lattice, &frame.sigma, &group.eps, &group.eta, 2000, 8, &mut rng);
    println!(
        "{} random pairs, {} exhaustive pairs mod 2, {} failures",
        scan.random_pairs,
        scan.exhaustive_pairs,
        scan.failures.len()
    );
    assert!(scan.failures.is_empty());
    Ok(())
}

fn main() {
    run_example().expect("cocycle example");
}
