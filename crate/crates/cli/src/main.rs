fn main() {
    std::process::exit(mnl_bandits_cli::run(std::env::args_os()));
}
