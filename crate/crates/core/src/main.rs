fn main() {
    std::process::exit(multibase::cli::run(std::env::args_os()));
}
