use std::io::Write;

fn main() {
    let run = euclid_core::cli::execute(std::env::args().skip(1));
    print!("{}", run.stdout);
    eprint!("{}", run.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(run.exit_code);
}
