fn main() {
    std::process::exit(hypertorsion::cli::main_with_args(std::env::args_os()));
}
