// Central characters and the irreducible modules of `V_L^+` for `L = Zβ`, `|β|² = 6`.

use orbifold::minus_one::{chi_value, classify_minus_one, enumerate_central_characters};
use orbifold::EvenLattice;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let l = EvenLattice::new(vec![vec![6]])?;
    let chars = enumerate_central_characters(&l);
    for chi in &chars {
        println!("{}: chi(U_beta) = {}", chi.label(), chi_value(chi, &[1])?);
    }
    assert_eq!(chars.len(), 2);

    let modules = classify_minus_one(&l);
    println!("{} irreducible modules:", modules.len());
    for m in &modules {
        println!("  {}", m.describe());
    }
    Ok(())
}

fn main() {
    run_example().expect("minus one example");
}
