fn main() {
    std::process::exit(itype::cli::run(std::env::args_os()));
}
