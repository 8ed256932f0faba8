fn main() {
    std::process::exit(densetop::cli::run(std::env::args().skip(1)));
}
