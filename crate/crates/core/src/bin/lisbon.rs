fn main() {
    std::process::exit(lisbon::cli::main_with_args(std::env::args_os()));
}
