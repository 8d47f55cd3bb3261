fn main() {
    std::process::exit(turanl2::cli::run(std::env::args_os()));
}
