fn main() {
    std::process::exit(orbik::cli::main_with_args(std::env::args_os()));
}
