fn main() {
    std::process::exit(whframe::cli::run(std::env::args_os()));
}
