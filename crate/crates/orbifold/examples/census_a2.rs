// The irreducible modules of the A2 orbifold by the diagram swap.

use orbifold::catalog;
use orbifold::census::{full_census, ModuleKind};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let e = catalog::entry("A2-dynkin")?;
    let report = full_census(&e.lattice, &e.isometry)?;
    for (i, m) in report.modules.iter().enumerate() {
        let kind = if m.kind == ModuleKind::Untwisted { "untwisted" } else { "twisted" };
        println!("{:>2} {:<9} {:?} h = {:<5} {}", i + 1, kind, m.eigen_sign, m.lowest_weight.to_string(), m.describe());
    }
    println!(
        "{} untwisted-type + {} twisted-type = {}",
        report.counts.untwisted, report.counts.twisted, report.counts.total
    );
    assert_eq!(report.counts.total, 20);
    assert!(report.all_checks_pass());
    Ok(())
}

fn main() {
    run_example().expect("A2 census example");
}
