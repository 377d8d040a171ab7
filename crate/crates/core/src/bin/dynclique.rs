fn main() {
    std::process::exit(dynclique::cli::main_with_std_io());
}
