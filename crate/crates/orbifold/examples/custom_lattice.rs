// A lattice that is not in the catalog: `A1 ⊕ A1 ⊕ A2` with the two `A1` factors swapped
// and `−1` on the `A2` factor.

use orbifold::census::{full_census_with, CensusOptions};
use orbifold::cli::InputSpec;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = InputSpec::from_json(
        r#"{
            "name": "A1+A1+A2",
            "gram": [[2,0,0,0],[0,2,0,0],[0,0,2,-1],[0,0,-1,2]],
            "sigma": [[0,1,0,0],[1,0,0,0],[0,0,-1,0],[0,0,0,-1]]
        }"#,
    )?;
    let (q, sigma) = spec.build()?;
    let opts = CensusOptions { name: spec.name.clone(), ..Default::default() };
    let report = full_census_with(&q, &sigma, &opts)?;
    println!(
        "{}: {} untwisted-type + {} twisted-type, N_tw = {}",
        spec.name.as_deref().unwrap_or("input"),
        report.counts.untwisted,
        report.counts.twisted,
        report.counts.n_tw
    );
    for c in &report.checks {
        println!("  {} {}", if c.passed { "ok" } else { "FAIL" }, c.name);
    }
    assert!(report.all_checks_pass());
    Ok(())
}

fn main() {
    run_example().expect("custom lattice example");
}
