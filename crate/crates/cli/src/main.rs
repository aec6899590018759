fn main() {
    std::process::exit(ginv_cli::run(std::env::args_os()));
}
