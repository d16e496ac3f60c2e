use orbifold::cli;

fn main() {
    let outcome = cli::run(std::env::args_os());
    if outcome.code == 0 {
        println!("{}", outcome.output.trim_end());
    } else {
        eprintln!("{}", outcome.output.trim_end());
    }
    std::process::exit(outcome.code);
}
