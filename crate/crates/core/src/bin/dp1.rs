fn main() {
    std::process::exit(dp1_core::cli::main_with_args(std::env::args_os()));
}
