fn main() {
    std::process::exit(torelli::cli::run(std::env::args_os()));
}
