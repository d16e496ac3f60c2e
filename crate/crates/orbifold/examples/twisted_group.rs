// The group `G_σ`, its irreducible modules, and an explicit model checked on a window.

use orbifold::catalog;
use orbifold::gsigma::TwistedGroup;
use orbifold::isometry::Frame;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let e = catalog::entry("A3-dynkin")?;
    let frame = Frame::new(&e.lattice, &e.isometry)?;
    let group = TwistedGroup::new(&frame)?;
    let classes = group.weight_class_group()?;
    let free = group.free_sign_group();
    println!("weight classes {}, free sign rank {}", classes.order(), free.dim());

    let descriptors = group.descriptors()?;
    for d in &descriptors {
        let weight: Vec<String> = d.weight.iter().map(|x| x.to_string()).collect();
        println!(
            "P{}: weight ({}), character {}, weight spaces of dimension {}, ground weight {}",
            d.index,
            weight.join(", "),
            d.character.label(),
            d.weight_space_dim,
            d.ground_weight
        );
        let rep = group.build_monomial_representation(d, 2)?;
        let check = rep.verify()?;
        println!(
            "   {} states: {} relation, {} C_a and {} sigma checks passed",
            check.states, check.relation_checks, check.c_checks, check.sigma_checks
        );
    }
    assert_eq!(descriptors.len(), 2);
    Ok(())
}

fn main() {
    run_example().expect("twisted group example");
}
