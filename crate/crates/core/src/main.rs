fn main() {
    std::process::exit(ptsym::cli::run());
}
