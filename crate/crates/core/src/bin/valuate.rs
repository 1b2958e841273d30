fn main() {
    std::process::exit(valuate::cli::main_with_args(std::env::args_os()));
}
