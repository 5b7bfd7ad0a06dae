fn main() {
    hcs_core::cli::init_logging();
    std::process::exit(hcs_core::cli::dispatch(std::env::args_os()));
}
