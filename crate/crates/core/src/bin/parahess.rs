fn main() {
    std::process::exit(parahess::cli::main_with_args(std::env::args_os()));
}
