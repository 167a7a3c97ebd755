fn main() {
    std::process::exit(symclass::cli::main_with_args(std::env::args_os()));
}
