fn main() {
    std::process::exit(zinbiel::cli::run(std::env::args_os()));
}
