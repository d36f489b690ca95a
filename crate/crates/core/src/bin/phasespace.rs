fn main() {
    std::process::exit(phasespace::cli::main_with_args(std::env::args_os()));
}
