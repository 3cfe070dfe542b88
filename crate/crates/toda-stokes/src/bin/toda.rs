fn main() {
    std::process::exit(toda_stokes::cli::run_from_env());
}
