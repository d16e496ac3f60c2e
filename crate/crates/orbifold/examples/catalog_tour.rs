// Runs every built-in lattice and compares the counts with the stored values.

use orbifold::catalog;
use orbifold::census::{full_census_with, CensusOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let opts = CensusOptions { window: 0, ..Default::default() };
    println!("{:<16} {:>10} {:>10} {:>6}", "entry", "computed", "stored", "source");
    for name in catalog::names() {
        let e = catalog::entry(&name)?;
        let r = full_census_with(&e.lattice, &e.isometry, &opts)?;
        let got = format!("{}+{}", r.counts.untwisted, r.counts.twisted);
        let want = format!("{}+{}", e.expected.untwisted, e.expected.twisted);
        let mark = if got == want { "" } else { "  differs" };
        println!("{:<16} {:>10} {:>10} {:>6?}{}", name, got, want, e.expected.source, mark);
    }
    Ok(())
}

fn main() {
    run_example().expect("catalog example");
}
