// Splitting a lattice under an involution: `L±`, `L = L₊ ⊕ L₋` and `Q̄`.

use orbifold::catalog;
use orbifold::isometry::{analyze, parity_equivalence_scan, Frame};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["A2-dynkin", "A3-dynkin", "D4-dynkin", "E6-dynkin"] {
        let e = catalog::entry(name)?;
        let split = analyze(&e.lattice, &e.isometry)?;
        let frame = Frame::new(&e.lattice, &e.isometry)?;
        let classes = parity_equivalence_scan(&e.lattice, &e.isometry)?;
        println!(
            "{:<10} [Q:Q-bar] = {}  [Q:L] = {}  L+ gram {:?}  L- gram {:?}  ({} classes of Q/2Q checked)",
            name,
            split.q_bar_index,
            split.l_index,
            frame.l_plus.gram(),
            frame.l_minus.gram(),
            classes
        );
    }
    let a2 = catalog::entry("A2-dynkin")?;
    let split = analyze(&a2.lattice, &a2.isometry)?;
    assert_eq!(split.q_bar_index, 2);
    assert_eq!(split.q_bar.basis(), split.l.basis());
    Ok(())
}

fn main() {
    run_example().expect("eigenlattice example");
}
