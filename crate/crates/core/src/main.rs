fn main() {
    std::process::exit(fqg::cli::run());
}
