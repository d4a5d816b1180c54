fn main() {
    std::process::exit(toom_bench::cli::run());
}
