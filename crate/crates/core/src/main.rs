fn main() {
    std::process::exit(emsoliton::cli::run(std::env::args_os()));
}
