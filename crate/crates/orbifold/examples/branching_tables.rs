// Branching of each module into `V_{L₊} ⊗ V_{L₋}^+`-modules for the A3 and D5 swaps.

use orbifold::catalog;
use orbifold::census::full_census;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["A3-dynkin", "D5-dynkin"] {
        let e = catalog::entry(name)?;
        let report = full_census(&e.lattice, &e.isometry)?;
        println!("{}:", name);
        for m in &report.modules {
            println!("  {}", m.describe());
        }
        for (label, v) in &e.expected.special {
            let v: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            println!("  {} = ({})", label, v.join(", "));
        }
        assert_eq!((report.counts.untwisted, report.counts.twisted), (5, 4));
    }
    Ok(())
}

fn main() {
    run_example().expect("branching example");
}
