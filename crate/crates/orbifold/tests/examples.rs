#[allow(dead_code)]
mod branching_tables_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/branching_tables.rs"));
}

#[test]
fn branching_tables_example_runs() {
    branching_tables_example::run_example().expect("branching tables example should run");
}

#[allow(dead_code)]
mod catalog_tour_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/catalog_tour.rs"));
}

#[test]
fn catalog_tour_example_runs() {
    catalog_tour_example::run_example().expect("catalog tour example should run");
}

#[allow(dead_code)]
mod census_a2_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/census_a2.rs"));
}

#[test]
fn census_a2_example_runs() {
    census_a2_example::run_example().expect("census a2 example should run");
}

#[allow(dead_code)]
mod cli_json_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cli_json.rs"));
}

#[test]
fn cli_json_example_runs() {
    cli_json_example::run_example().expect("cli json example should run");
}

#[allow(dead_code)]
mod cocycle_and_eta_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cocycle_and_eta.rs"));
}

#[test]
fn cocycle_and_eta_example_runs() {
    cocycle_and_eta_example::run_example().expect("cocycle and eta example should run");
}

#[allow(dead_code)]
mod custom_lattice_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/custom_lattice.rs"));
}

#[test]
fn custom_lattice_example_runs() {
    custom_lattice_example::run_example().expect("custom lattice example should run");
}

#[allow(dead_code)]
mod eigenlattice_split_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/eigenlattice_split.rs"));
}

#[test]
fn eigenlattice_split_example_runs() {
    eigenlattice_split_example::run_example().expect("eigenlattice split example should run");
}

#[allow(dead_code)]
mod exact_scalars_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/exact_scalars.rs"));
}

#[test]
fn exact_scalars_example_runs() {
    exact_scalars_example::run_example().expect("exact scalars example should run");
}

#[allow(dead_code)]
mod lattice_basics_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lattice_basics.rs"));
}

#[test]
fn lattice_basics_example_runs() {
    lattice_basics_example::run_example().expect("lattice basics example should run");
}

#[allow(dead_code)]
mod minus_one_sector_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/minus_one_sector.rs"));
}

#[test]
fn minus_one_sector_example_runs() {
    minus_one_sector_example::run_example().expect("minus one sector example should run");
}

#[allow(dead_code)]
mod theta_series_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/theta_series.rs"));
}

#[test]
fn theta_series_example_runs() {
    theta_series_example::run_example().expect("theta series example should run");
}

#[allow(dead_code)]
mod twisted_group_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/twisted_group.rs"));
}

#[test]
fn twisted_group_example_runs() {
    twisted_group_example::run_example().expect("twisted group example should run");
}
