fn main() {
    std::process::exit(cominq::cli::run());
}
