fn main() {
    std::process::exit(eafkit::cli::run(std::env::args_os()));
}
