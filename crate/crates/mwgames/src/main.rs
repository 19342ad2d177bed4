fn main() {
    std::process::exit(mwgames::cli::run());
}
