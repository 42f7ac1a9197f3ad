fn main() {
    std::process::exit(barbilian::cli::run());
}
