// Driving the command line in-process and reading its JSON back.

use orbifold::census::CensusReport;
use orbifold::cli;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let out = cli::run(["ova", "theta", "--catalog", "A2-dynkin", "--coset", "0,0", "--order", "4"]);
    println!("theta: {} (exit {})", out.output, out.code);

    let out = cli::run(["ova", "classify", "--catalog", "A2-neg-dynkin", "--json"]);
    let report: CensusReport = serde_json::from_str(&out.output)?;
    println!("A2 with -sigma: {} modules", report.counts.total);
    assert_eq!(report.counts.total, 48);
    assert_eq!(serde_json::to_string_pretty(&report)?, out.output);

    let dir = std::env::temp_dir().join("ova-cli-example");
    std::fs::create_dir_all(&dir)?;
    let bad = dir.join("identity.json");
    std::fs::write(&bad, r#"{"name": "identity", "gram": [[2]], "sigma": [[1]]}"#)?;
    let out = cli::run(["ova", "analyze", "--input", bad.to_str().ok_or("path")?]);
    println!("{} (exit {})", out.output, out.code);
    assert_eq!(out.code, 3);
    Ok(())
}

fn main() {
    run_example().expect("cli example");
}
