fn main() {
    std::process::exit(ddmog::cli::main_with_env());
}
