fn main() {
    let code = dini_core::cli::run(std::env::args());
    std::process::exit(code);
}
