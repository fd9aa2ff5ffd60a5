fn main() {
    std::process::exit(schurforge::cli::run(std::env::args_os()));
}
