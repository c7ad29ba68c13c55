fn main() {
    std::process::exit(compsearch_cli::run(std::env::args_os()));
}
