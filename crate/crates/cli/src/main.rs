fn main() {
    std::process::exit(timed_matching_cli::run_main(std::env::args_os()));
}
