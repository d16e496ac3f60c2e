// Gram matrices, discriminant groups and short vectors of a coset.

use orbifold::lattice::{discriminant_group, enumerate_coset_vectors, hnf_lower, smith_normal_form};
use orbifold::{EvenLattice, Rational};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a2 = EvenLattice::new(vec![vec![2, -1], vec![-1, 2]])?;
    println!("A2: rank {}, det {}", a2.rank(), a2.det());

    let disc = discriminant_group(&a2);
    println!("A2*/A2 invariant factors {:?}, generator {:?}", disc.invariant_factors, disc.generator_lifts);
    assert_eq!(disc.order(), 3);

    let (_, d, _) = smith_normal_form(a2.gram());
    println!("Smith diagonal of the Gram matrix: {:?}", d);
    println!("lower Hermite form of <(2,1),(0,3)>: {:?}", hnf_lower(&[vec![2, 1], vec![0, 3]], 2));

    let roots = enumerate_coset_vectors(&a2, &[Rational::zero(), Rational::zero()], &Rational::from_int(2));
    println!("{} vectors of norm at most 2 (including 0)", roots.len());
    assert_eq!(roots.len(), 7);

    let rep = disc.generator_lifts[0].clone();
    let minimal = enumerate_coset_vectors(&a2, &rep, &Rational::new(2, 3));
    println!("minimal vectors of the coset {:?}: {:?}", rep, minimal);
    assert_eq!(minimal.len(), 3);

    match EvenLattice::new(vec![vec![1]]) {
        Err(e) => println!("rejected: {}", e),
        Ok(_) => return Err("an odd lattice was accepted".into()),
    }
    Ok(())
}

fn main() {
    run_example().expect("lattice example");
}
