fn main() {
    let code = higher_composition::cli::run(std::env::args_os(), &mut std::io::stdout());
    std::process::exit(code);
}
