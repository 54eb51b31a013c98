fn main() {
    std::process::exit(platrec::cli::run(std::env::args_os()));
}
