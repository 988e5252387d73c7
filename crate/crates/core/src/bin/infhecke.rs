fn main() {
    std::process::exit(infhecke_core::cli::main_with_args(std::env::args_os()));
}
