fn main() {
    let outcome = hopfcoh::cli::run(std::env::args_os());
    if outcome.code == hopfcoh::cli::EXIT_OK {
        print!("{}", outcome.output);
    } else {
        eprint!("{}", outcome.output);
    }
    std::process::exit(outcome.code);
}
