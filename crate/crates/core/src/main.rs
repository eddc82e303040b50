fn main() {
    std::process::exit(gamecat::cli::run(std::env::args_os()));
}
