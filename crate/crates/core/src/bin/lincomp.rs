fn main() {
    std::process::exit(lincomp::cli::main_with_args(std::env::args_os()));
}
