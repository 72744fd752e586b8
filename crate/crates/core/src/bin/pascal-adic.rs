fn main() {
    std::process::exit(pascal_adic::cli::main_with_args(std::env::args_os()));
}
