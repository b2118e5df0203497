fn main() {
    std::process::exit(apex_randic::cli::run());
}
