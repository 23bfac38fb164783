fn main() {
    std::process::exit(partial_vc::cli::main_with_args(std::env::args_os()));
}
