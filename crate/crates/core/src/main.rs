fn main() {
    std::process::exit(diskscat::cli::main());
}
