fn main() {
    std::process::exit(biserial::cli::run(std::env::args_os()));
}
