fn main() {
    std::process::exit(trigmat::cli::main_with_std());
}
