fn main() {
    std::process::exit(harmonic_identities::cli::run(std::env::args_os()));
}
