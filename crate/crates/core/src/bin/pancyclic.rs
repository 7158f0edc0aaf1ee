fn main() {
    std::process::exit(pancyclic::cli::run(std::env::args_os()));
}
